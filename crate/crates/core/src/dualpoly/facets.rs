use num_traits::Zero;

use super::{molecule, DualParams, Molecule};
use crate::error::{bad_params, Error, Result};
use crate::exactnum::{Rational, Surd};
use crate::halfspace::{Halfspace, HalfspaceSystem};
use crate::roofs::RoofSpec;

/// Largest dimension for explicit facet enumeration.
pub const MAX_FACET_DIM: usize = 24;

/// A facet `P_{I,±}` of the dual body. `subset` is a bitmask over `[d]`
/// (bit `k` stands for coordinate `k+1`); the full mask marks the two
/// extraordinary facets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetId {
    pub subset: u64,
    pub plus: bool,
}

impl FacetId {
    pub fn new(subset: u64, plus: bool) -> FacetId {
        FacetId { subset, plus }
    }

    pub fn size(&self) -> usize {
        self.subset.count_ones() as usize
    }

    pub fn is_extraordinary(&self, d: usize) -> bool {
        self.subset == full_mask(d)
    }

    fn validate(&self, d: usize) -> Result<()> {
        if self.subset == 0 || self.subset > full_mask(d) {
            return Err(Error::BadFacet(format!(
                "subset mask {:#b} must be a nonempty subset of [{d}]",
                self.subset
            )));
        }
        Ok(())
    }
}

/// Supporting hyperplane `<normal, x> = rhs` of one facet. The body lies on
/// the side containing the origin.
///
/// Sign convention: `P_{I,+}` sits on `b Σ_I x + (b-c) Σ_{I^c} x = -bc`
/// (and `Σ x = -c` when `I = [d]`); `P_{I,-}` is its mirror image.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FacetHyperplane {
    pub id: FacetId,
    pub normal: Vec<Rational>,
    pub rhs: Rational,
}

impl FacetHyperplane {
    /// The facet's halfspace in `<= offset` form.
    pub fn halfspace(&self) -> Halfspace {
        if self.id.plus {
            Halfspace {
                normal: self.normal.iter().map(|x| -x).collect(),
                offset: -self.rhs.clone(),
            }
        } else {
            Halfspace {
                normal: self.normal.clone(),
                offset: self.rhs.clone(),
            }
        }
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.normal
            .iter()
            .zip(x)
            .fold(Rational::zero(), |acc, (n, v)| acc + n * v)
            == self.rhs
    }
}

fn full_mask(d: usize) -> u64 {
    (1u64 << d) - 1
}

fn check_enumerable(d: usize) -> Result<()> {
    if d > MAX_FACET_DIM {
        return Err(Error::DimensionTooLarge(d, MAX_FACET_DIM));
    }
    Ok(())
}

fn hyperplane(p: &DualParams, id: FacetId) -> FacetHyperplane {
    let d = p.dim();
    let sign = if id.plus {
        -Rational::from_integer(1.into())
    } else {
        Rational::from_integer(1.into())
    };
    if id.is_extraordinary(d) {
        return FacetHyperplane {
            id,
            normal: vec![Rational::from_integer(1.into()); d],
            rhs: sign * p.c(),
        };
    }
    let off = p.b() - p.c();
    let normal = (0..d)
        .map(|k| {
            if id.subset >> k & 1 == 1 {
                p.b().clone()
            } else {
                off.clone()
            }
        })
        .collect();
    FacetHyperplane {
        id,
        normal,
        rhs: sign * p.b() * p.c(),
    }
}

/// All `2^(d+1) - 2` facet hyperplanes, by ascending mask with `+` first.
pub fn facet_hyperplanes(p: &DualParams) -> Result<Vec<FacetHyperplane>> {
    check_enumerable(p.dim())?;
    let mut out = Vec::with_capacity(2 * full_mask(p.dim()) as usize);
    for mask in 1..=full_mask(p.dim()) {
        for plus in [true, false] {
            out.push(hyperplane(p, FacetId::new(mask, plus)));
        }
    }
    Ok(out)
}

/// H-representation assembled from every facet, without pruning.
pub fn halfspaces(p: &DualParams) -> Result<HalfspaceSystem> {
    let mut hs = HalfspaceSystem::new(p.dim());
    for f in facet_hyperplanes(p)? {
        let h = f.halfspace();
        hs.push(h.normal, h.offset);
    }
    Ok(hs)
}

/// `P_{I,+} = {m_{j,i} : i ∈ I, j ∈ I^c ∪ {0}}`; `P_{I,-}` is its negation.
pub fn facet_vertices(p: &DualParams, f: FacetId) -> Result<Vec<Molecule>> {
    f.validate(p.dim())?;
    let d = p.dim();
    let inside: Vec<usize> = (1..=d).filter(|k| f.subset >> (k - 1) & 1 == 1).collect();
    let outside: Vec<usize> = std::iter::once(0)
        .chain((1..=d).filter(|k| f.subset >> (k - 1) & 1 == 0))
        .collect();
    let mut out = Vec::with_capacity(inside.len() * outside.len());
    for &i in &inside {
        for &j in &outside {
            out.push(if f.plus {
                molecule(p, j, i)
            } else {
                molecule(p, i, j)
            });
        }
    }
    Ok(out)
}

/// Membership: `|Σx| <= c` and `|b Σ_I x + (b-c) Σ_{I^c} x| <= bc` for every
/// proper nonempty `I`.
pub fn contains(p: &DualParams, x: &[Rational]) -> Result<bool> {
    if x.len() != p.dim() {
        return Err(Error::DimensionMismatch {
            expected: p.dim(),
            got: x.len(),
        });
    }
    halfspaces(p)?.contains(x)
}

/// Distance from the origin to any ordinary facet hyperplane with `|I| = V`:
/// `bc / √(V b² + (d-V)(b-c)²)`.
pub fn hyperplane_origin_distance(p: &DualParams, v: usize) -> Result<Surd> {
    let d = p.dim();
    if v < 1 || v + 1 > d {
        return Err(bad_params(format!("1 ≤ V ≤ d-1 (got V = {v}, d = {d})")));
    }
    let bc = p.b() * p.c();
    Surd::sqrt(&(&bc * &bc / radicand(p, v)))
}

/// `V b² + (d-V)(b-c)²`.
fn radicand(p: &DualParams, v: usize) -> Rational {
    let d = p.dim();
    let off = p.b() - p.c();
    Rational::from_integer(v.into()) * p.b() * p.b()
        + Rational::from_integer((d - v).into()) * &off * &off
}

/// The ordinary facet `P_{I,+}` as `Roof(d-|I|, |I|, √2 b, √2 c, h)` with
/// `h = √(V b² + (d-V)(b-c)²) / √((d-V) V)`.
pub fn facet_roof_spec(p: &DualParams, subset: u64) -> Result<RoofSpec> {
    let d = p.dim();
    if subset == 0 || subset >= full_mask(d) {
        return Err(Error::BadFacet(format!(
            "ordinary facets need a proper nonempty subset of [{d}], got mask {subset:#b}"
        )));
    }
    let v = subset.count_ones() as usize;
    let c = d - v;
    let sqrt2 = Surd::sqrt_int(2)?;
    let h = Surd::sqrt(&(radicand(p, v) / Rational::from_integer((c * v).into())))?;
    RoofSpec::new(c, v, sqrt2.scale(p.b()), sqrt2.scale(p.c()), h)
}
