use serde_json::{json, Value};

use isocant_core::dualpoly::{self, DualParams};
use isocant_core::exactnum::{rational_to_f64, Rational};
use isocant_core::isocanted::{self, IsocantedParams};
use isocant_core::mahler::{self, ConstantTerm};
use isocant_core::oracles::{lp_vertices, mc_volume_halfspaces, zonotope_volume, MAX_GENERATORS, MAX_LP_DIM};
use isocant_core::roofs::{self, RoofSpec};
use isocant_core::structmat::bose;
use isocant_core::{Error, Result};
use num_traits::Signed;

use crate::record::OutputRecord;
use crate::{Command, DualArgs, Format, Output, Primal, Sweep, TableFormat, DEFAULT_SAMPLES, SAMPLES_ENV};

/// Monte Carlo is skipped above this dimension: the hit rate in the box
/// becomes too small to say anything at a million samples.
const MC_MAX_DIM: usize = 8;
const MC_SIGMAS: f64 = 5.0;

pub(crate) fn dispatch(command: Command) -> Result<Output> {
    match command {
        Command::Volume { p, format } => volume(&p).map(|r| Output::Record(r, format)),
        Command::DualVolume { p, format } => dual_volume(&p).map(|r| Output::Record(r, format)),
        Command::Vertices { p, dual, format } => vertices(&p, dual).map(|r| Output::Record(r, format)),
        Command::Fvector { d, format } => fvector(d).map(|r| Output::Record(r, format)),
        Command::Facets { p, format } => facets(&p).map(|r| Output::Record(r, format)),
        Command::Roof { c, v, ell1, ell2, h, format } => {
            roof(RoofSpec::new(c, v, ell1, ell2, h)?).map(|r| Output::Record(r, format))
        }
        Command::Mahler { d, certificate, format } => mahler(d, certificate).map(|r| Output::Record(r, format)),
        Command::Probability { d, wait, format } => probability(d, &wait).map(|r| Output::Record(r, format)),
        Command::MetricCheck { p, format } => metric_check(&p).map(|r| Output::Record(r, format)),
        Command::Verify { p, samples, seed, format } => verify(&p, samples, seed, format),
        Command::Table { sweep, d, ell, a, steps, d_min, d_max, format } => {
            table(sweep, d, &ell, &a, steps, d_min, d_max, format).map(Output::Table)
        }
    }
}

fn primal(p: &Primal) -> Result<IsocantedParams> {
    IsocantedParams::new(p.d, p.ell.clone(), p.a.clone())
}

fn dual(p: &DualArgs) -> Result<DualParams> {
    match (&p.ell, &p.a, &p.b, &p.c) {
        (Some(ell), Some(a), _, _) => Ok(DualParams::from_primal(&IsocantedParams::new(p.d, ell.clone(), a.clone())?)),
        (_, _, Some(b), Some(c)) => DualParams::new(p.d, b.clone(), c.clone()),
        _ => Err(Error::BadParams("either --ell and --a, or --b and --c".into())),
    }
}

fn exact(command: &str, q: &Rational) -> OutputRecord {
    OutputRecord::new(command, q, Some(rational_to_f64(q)))
}

fn strings<T: ToString>(items: &[T]) -> Value {
    Value::Array(items.iter().map(|x| Value::String(x.to_string())).collect())
}

fn with_primal(r: OutputRecord, p: &IsocantedParams) -> OutputRecord {
    r.param("d", p.dim()).param("ell", p.ell()).param("a", p.a())
}

fn with_dual(r: OutputRecord, p: &DualParams) -> OutputRecord {
    r.param("d", p.dim()).param("b", p.b()).param("c", p.c())
}

fn volume(p: &Primal) -> Result<OutputRecord> {
    let p = primal(p)?;
    Ok(with_primal(exact("volume", &isocanted::volume(&p)), &p))
}

fn dual_volume(p: &DualArgs) -> Result<OutputRecord> {
    let q = dual(p)?;
    Ok(with_dual(exact("dual-volume", &dualpoly::volume(&q)), &q))
}

fn vertices(p: &Primal, dual_body: bool) -> Result<OutputRecord> {
    let p = primal(p)?;
    let points: Vec<Vec<Rational>> = if dual_body {
        dualpoly::molecules(&DualParams::from_primal(&p))
            .into_iter()
            .map(|m| m.point)
            .collect()
    } else {
        isocanted::vertices(&p)?
    };
    let n = points.len();
    let list: Vec<Value> = points.iter().map(|v| strings(v)).collect();
    Ok(with_primal(OutputRecord::new("vertices", n, Some(n as f64)), &p)
        .param("body", if dual_body { "dual" } else { "primal" })
        .extra("vertices", list))
}

fn fvector(d: usize) -> Result<OutputRecord> {
    if d < 2 {
        return Err(Error::BadParams(format!("d ≥ 2 (got d = {d})")));
    }
    let f = dualpoly::f_vector(d);
    let joined: Vec<String> = f.iter().map(ToString::to_string).collect();
    Ok(OutputRecord::new("fvector", joined.join(","), None)
        .param("d", d)
        .extra("f_vector", strings(&f)))
}

fn facets(p: &DualArgs) -> Result<OutputRecord> {
    let q = dual(p)?;
    let list: Vec<Value> = dualpoly::facet_hyperplanes(&q)?
        .into_iter()
        .map(|f| {
            let subset: Vec<String> = (0..q.dim())
                .filter(|k| f.id.subset >> k & 1 == 1)
                .map(|k| (k + 1).to_string())
                .collect();
            json!({
                "subset": subset.join(","),
                "sign": if f.id.plus { "+" } else { "-" },
                "normal": strings(&f.normal),
                "rhs": f.rhs.to_string(),
                "vertices": dualpoly::facet_vertices(&q, f.id).map(|v| v.len()).unwrap_or(0),
            })
        })
        .collect();
    let n = list.len();
    Ok(with_dual(OutputRecord::new("facets", n, Some(n as f64)), &q).extra("facets", list))
}

fn roof(spec: RoofSpec) -> Result<OutputRecord> {
    let vol = roofs::roof_volume(&spec)?;
    Ok(OutputRecord::new("roof", &vol, Some(vol.to_f64()))
        .param("C", spec.c())
        .param("V", spec.v())
        .param("ell1", spec.ell1())
        .param("ell2", spec.ell2())
        .param("h", spec.height())
        .extra("dim", spec.dim())
        .extra("ell3", roofs::ell3(&spec)?.to_string()))
}

fn mahler(d: usize, full: bool) -> Result<OutputRecord> {
    let cert = mahler::positivity_certificate(d)?;
    let coeffs: Vec<String> = cert.coefficients.iter().map(ToString::to_string).collect();
    let mut r = OutputRecord::new("mahler", coeffs.join(","), None)
        .param("d", d)
        .extra("d", d)
        .extra("coeffs", strings(&cert.coefficients))
        .extra("k_threshold", cert.k_threshold)
        .extra("verdict", cert.verdict)
        .extra("sign_pattern", cert.sign_pattern());
    if full {
        r = r
            .extra("sign_change_count", cert.sign_change_count)
            .extra("value_at_one", cert.value_at_one.to_string())
            .extra(
                "constant_term",
                match cert.constant_term {
                    ConstantTerm::Positive => "positive",
                    ConstantTerm::ZeroFactorable => "zero_factorable",
                },
            )
            .extra("central_binomial_bound", mahler::central_binomial_bound(d))
            .extra("lower_bound", mahler::mahler_lower_bound(d).to_string());
    }
    Ok(r)
}

fn probability(d: usize, wait: &Rational) -> Result<OutputRecord> {
    let p = isocanted::meeting_probability(d, wait)?;
    Ok(exact("probability", &p).param("d", d).param("wait", wait))
}

fn metric_check(p: &Primal) -> Result<OutputRecord> {
    let m = dualpoly::metric_space(p.d, &p.ell, &p.a)?;
    let ok = dualpoly::four_point_check(&m)?;
    let rows: Vec<Value> = (0..m.rows()).map(|i| strings(m.row(i))).collect();
    Ok(OutputRecord::new("metric-check", ok, None)
        .param("d", p.d)
        .param("ell", &p.ell)
        .param("a", &p.a)
        .extra("four_point", ok)
        .extra("distances", rows))
}

struct Check {
    name: &'static str,
    pass: Option<bool>,
    detail: String,
}

fn verify(p: &Primal, samples: Option<u64>, seed: u64, format: Format) -> Result<Output> {
    let params = primal(p)?;
    let samples = match samples {
        Some(n) => n,
        None => match std::env::var(SAMPLES_ENV) {
            Ok(s) => s
                .trim()
                .parse()
                .map_err(|_| Error::BadParams(format!("{SAMPLES_ENV} must be a positive integer (got {s:?})")))?,
            Err(_) => DEFAULT_SAMPLES,
        },
    };
    let d = params.dim();
    let vol = isocanted::volume(&params);
    let q = DualParams::from_primal(&params);
    let dual_vol = dualpoly::volume(&q);
    let mut checks = Vec::new();

    let det = bose(params.ell(), params.a(), d)?.det().abs();
    checks.push(Check {
        name: "bose-determinant",
        pass: Some(det == vol),
        detail: format!("|det M| = {det}, closed form {vol}"),
    });

    if d < MAX_GENERATORS {
        let z = zonotope_volume(&isocanted::generators(&params))?;
        checks.push(Check {
            name: "zonotope",
            pass: Some(z == vol),
            detail: format!("minor sum {z}"),
        });
    } else {
        checks.push(skip("zonotope", "too many generators"));
    }

    if d <= MAX_LP_DIM && params.a().is_positive() {
        let mut expected = isocanted::vertices(&params)?;
        expected.sort();
        let found = lp_vertices(&isocanted::halfspaces(&params))?;
        checks.push(Check {
            name: "lp-vertices",
            pass: Some(found == expected),
            detail: format!("{} basic feasible points, {} expected", found.len(), expected.len()),
        });
    } else {
        checks.push(skip("lp-vertices", "needs d ≤ 4 and a > 0"));
    }

    let pyramid = dualpoly::volume_pyramid_sum(&q);
    checks.push(Check {
        name: "dual-pyramid-sum",
        pass: Some(pyramid == dual_vol),
        detail: format!("pyramid sum {pyramid}, closed form {dual_vol}"),
    });

    let product = &vol * &dual_vol;
    checks.push(Check {
        name: "mahler-bound",
        pass: Some(product >= mahler::mahler_lower_bound(d)),
        detail: format!("product {product} ≥ {}", mahler::mahler_lower_bound(d)),
    });

    if d <= MC_MAX_DIM {
        let half = params.ell() / Rational::from_integer(2.into());
        let primal_box = vec![(-half.clone(), half); d];
        let est = mc_volume_halfspaces(&isocanted::halfspaces(&params), &primal_box, samples, seed)?;
        checks.push(mc_check("mc-primal", &est, &vol));

        let reach = if q.b() > q.c() { q.b().clone() } else { q.c().clone() };
        let dual_box = vec![(-reach.clone(), reach); d];
        let est = mc_volume_halfspaces(&dualpoly::halfspaces(&q)?, &dual_box, samples, seed.wrapping_add(1))?;
        checks.push(mc_check("mc-dual", &est, &dual_vol));
    } else {
        checks.push(skip("mc-primal", "d too large for hit-or-miss"));
        checks.push(skip("mc-dual", "d too large for hit-or-miss"));
    }

    let passed = checks.iter().all(|c| c.pass != Some(false));
    let list: Vec<Value> = checks
        .iter()
        .map(|c| {
            json!({
                "name": c.name,
                "status": match c.pass { Some(true) => "pass", Some(false) => "fail", None => "skip" },
                "detail": c.detail,
            })
        })
        .collect();
    let record = with_primal(OutputRecord::new("verify", if passed { "pass" } else { "fail" }, None), &params)
        .param("samples", samples)
        .param("seed", format!("{seed:#x}"))
        .extra("checks", list);
    let lines = checks
        .iter()
        .map(|c| {
            let status = match c.pass {
                Some(true) => "PASS",
                Some(false) => "FAIL",
                None => "SKIP",
            };
            format!("{status} {:<17} {}", c.name, c.detail)
        })
        .collect();
    Ok(Output::Verified { record, format, passed, lines })
}

fn skip(name: &'static str, why: &str) -> Check {
    Check {
        name,
        pass: None,
        detail: format!("skipped: {why}"),
    }
}

fn mc_check(name: &'static str, est: &isocant_core::McEstimate, exact: &Rational) -> Check {
    let target = rational_to_f64(exact);
    Check {
        name,
        pass: Some(est.agrees_with(target, MC_SIGMAS)),
        detail: format!(
            "{:.6} ± {:.6} vs {target:.6} ({} samples)",
            est.estimate, est.std_error, est.samples
        ),
    }
}

pub(crate) const CSV_COLUMNS: [&str; 10] = [
    "d", "ell", "a", "b", "c", "vol_primal", "vol_dual", "product", "mahler_lower_bound", "margin",
];

struct Row {
    d: usize,
    values: [Rational; 9],
}

fn row(d: usize, ell: &Rational, a: &Rational) -> Result<Row> {
    let p = IsocantedParams::new(d, ell.clone(), a.clone())?;
    let q = DualParams::from_primal(&p);
    let vp = isocanted::volume(&p);
    let vd = dualpoly::volume(&q);
    let product = &vp * &vd;
    let bound = mahler::mahler_lower_bound(d);
    let margin = &product - &bound;
    Ok(Row {
        d,
        values: [ell.clone(), a.clone(), q.b().clone(), q.c().clone(), vp, vd, product, bound, margin],
    })
}

#[allow(clippy::too_many_arguments)]
fn table(
    sweep: Sweep,
    d: usize,
    ell: &Rational,
    a: &Rational,
    steps: usize,
    d_min: usize,
    d_max: usize,
    format: TableFormat,
) -> Result<String> {
    let rows: Vec<Row> = match sweep {
        Sweep::A => {
            if steps == 0 {
                return Err(Error::BadParams("steps ≥ 1".into()));
            }
            (0..steps)
                .map(|k| {
                    let a = ell * Rational::new(k.into(), steps.into());
                    row(d, ell, &a)
                })
                .collect::<Result<_>>()?
        }
        Sweep::D => {
            if d_min < 2 || d_min > d_max {
                return Err(Error::BadParams(format!("2 ≤ d-min ≤ d-max (got {d_min}..{d_max})")));
            }
            (d_min..=d_max).map(|d| row(d, ell, a)).collect::<Result<_>>()?
        }
    };
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            out.push_str(&CSV_COLUMNS.join(","));
            out.push('\n');
            for r in &rows {
                let cells: Vec<String> = std::iter::once(r.d.to_string())
                    .chain(r.values.iter().map(|v| rational_to_f64(v).to_string()))
                    .collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
        }
        TableFormat::Json => {
            for r in &rows {
                let mut rec = OutputRecord::new("table", &r.values[6], Some(rational_to_f64(&r.values[6])))
                    .param("d", r.d)
                    .param("ell", &r.values[0])
                    .param("a", &r.values[1]);
                for (name, v) in CSV_COLUMNS[3..].iter().zip(&r.values[2..]) {
                    rec = rec.extra(name, v.to_string());
                }
                out.push_str(&rec.to_json_line());
                out.push('\n');
            }
        }
    }
    Ok(out)
}
