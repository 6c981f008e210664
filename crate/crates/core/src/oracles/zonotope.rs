use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{bad_params, Error, Result};
use crate::exactnum::Rational;
use crate::isocanted::GeneratorSet;
use crate::structmat::bareiss_det;

pub const MAX_GENERATORS: usize = 24;

/// `vol(Σ [-y_i, y_i]) = 2^d Σ_{|S| = d} |det(y_S)|`.
pub fn zonotope_volume(gens: &GeneratorSet) -> Result<Rational> {
    let n = gens.len();
    if n > MAX_GENERATORS {
        return Err(Error::TooManyGenerators(n));
    }
    let d = gens.dim();
    if d == 0 {
        return Err(bad_params("at least one generator of positive dimension"));
    }
    if let Some(bad) = gens.generators.iter().find(|g| g.len() != d) {
        return Err(Error::DimensionMismatch {
            expected: d,
            got: bad.len(),
        });
    }
    if n < d {
        return Ok(Rational::zero());
    }

    // Scale each generator to an integer vector; its scale factor rides
    // along as an extra trailing entry.
    let columns: Vec<Vec<BigInt>> = gens
        .generators
        .iter()
        .map(|g| {
            let lcm = g.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
            let mut col: Vec<BigInt> = g.iter().map(|q| q.numer() * (&lcm / q.denom())).collect();
            col.push(lcm);
            col
        })
        .collect();

    let mut total = Rational::zero();
    let full: u32 = (1u32 << n) - 1;
    let mut mask: u32 = (1u32 << d) - 1;
    loop {
        let chosen: Vec<&Vec<BigInt>> = (0..n)
            .filter(|&k| mask >> k & 1 == 1)
            .map(|k| &columns[k])
            .collect();
        let rows: Vec<Vec<BigInt>> = (0..d)
            .map(|i| chosen.iter().map(|c| c[i].clone()).collect())
            .collect();
        let det = bareiss_det(rows);
        if !det.is_zero() {
            let denom = chosen.iter().fold(BigInt::one(), |acc, c| acc * &c[d]);
            total += Rational::new(det.abs(), denom);
        }
        // Gosper's hack: next mask with the same popcount.
        let low = mask & mask.wrapping_neg();
        let ripple = mask + low;
        mask = ripple | (((ripple ^ mask) >> 2) / low);
        if mask > full {
            break;
        }
    }
    Ok(total * Rational::from_integer(BigInt::from(2).pow(d as u32)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::rat;
    use crate::isocanted::{generators, volume, IsocantedParams};
    use proptest::prelude::*;

    fn set(rows: &[&[(i64, i64)]]) -> GeneratorSet {
        GeneratorSet {
            generators: rows
                .iter()
                .map(|r| r.iter().map(|&(p, q)| rat(p, q)).collect())
                .collect(),
        }
    }

    #[test]
    fn examples() {
        assert_eq!(zonotope_volume(&set(&[&[(1, 2), (0, 1)], &[(0, 1), (1, 2)]])).unwrap(), rat(1, 1));
        let hex = set(&[&[(1, 2), (0, 1)], &[(0, 1), (1, 2)], &[(1, 2), (1, 2)]]);
        assert_eq!(zonotope_volume(&hex).unwrap(), rat(3, 1));
        for d in 2..=6 {
            let p = IsocantedParams::new(d, rat(3, 2), rat(0, 1)).unwrap();
            assert_eq!(zonotope_volume(&generators(&p)).unwrap(), volume(&p));
        }
    }

    #[test]
    fn limits() {
        let gens = GeneratorSet {
            generators: (0..25).map(|k| vec![rat(k, 1), rat(1, 1)]).collect(),
        };
        assert_eq!(zonotope_volume(&gens), Err(Error::TooManyGenerators(25)));
        let one = set(&[&[(1, 1), (2, 1)]]);
        assert_eq!(zonotope_volume(&one).unwrap(), rat(0, 1));
    }

    #[test]
    fn all_24_subsets_enumerated() {
        // 24 unit generators in the plane along 24 distinct directions:
        // compare against a direct pair sum.
        let gens: Vec<Vec<Rational>> = (0..24).map(|k| vec![rat(1, 1), rat(k, 3)]).collect();
        let mut direct = Rational::zero();
        for i in 0..24 {
            for j in i + 1..24 {
                let det = &gens[i][0] * &gens[j][1] - &gens[i][1] * &gens[j][0];
                direct += det.abs();
            }
        }
        let got = zonotope_volume(&GeneratorSet { generators: gens }).unwrap();
        assert_eq!(got, direct * rat(4, 1));
    }

    fn small_rational() -> impl Strategy<Value = Rational> {
        (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn permutation_negation_and_zero(
            d in 2usize..=3,
            extra in 0usize..=3,
            entries in proptest::collection::vec(small_rational(), 18),
            flip in 0usize..6,
            rot in 0usize..6,
        ) {
            let n = d + extra;
            let mut gens: Vec<Vec<Rational>> =
                (0..n).map(|k| entries[k * d..(k + 1) * d].to_vec()).collect();
            let base = zonotope_volume(&GeneratorSet { generators: gens.clone() }).unwrap();
            let f = flip % n;
            gens[f] = gens[f].iter().map(|x| -x).collect();
            gens.rotate_left(rot % n);
            prop_assert_eq!(&zonotope_volume(&GeneratorSet { generators: gens.clone() }).unwrap(), &base);
            gens.push(vec![Rational::zero(); d]);
            prop_assert_eq!(&zonotope_volume(&GeneratorSet { generators: gens }).unwrap(), &base);
        }
    }
}
