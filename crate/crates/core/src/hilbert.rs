//! The first Hilbert coefficient `e1` of `k[[H]]`.
//!
//! Three independent routes are provided (genus difference with the
//! blow-up, Apery-set differences, and the Hilbert function itself) along
//! with the closed forms for special families and Kirby's bounds
//! `n1 - 1 <= e1 <= n1 (n1 - 1) / 2`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{
    exact_div, fit, mainthm_precondition, small_d_precondition, EvalMode, FamilyParams,
};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

/// The blow-up `<n1, n2 - n1, ..., ne - n1>`, re-minimalized.
pub fn blowup(h: &NumericalSemigroup) -> NumericalSemigroup {
    let n1 = h.multiplicity();
    let gens: Vec<i64> = std::iter::once(n1)
        .chain(h.generators()[1..].iter().map(|&g| g - n1))
        .collect();
    NumericalSemigroup::from_generating_set(&gens)
        .expect("generators of the blow-up are positive with gcd one")
}

/// `e1 = g(H) - g(H')`.
pub fn e1_by_genus(h: &NumericalSemigroup) -> i64 {
    h.genus_by_gaps() - blowup(h).genus_by_gaps()
}

/// `e1 = sum (k_i - l_i)` where `omega_i = k_i n1 + i` in `H` and
/// `omega'_i = l_i n1 + i` in the blow-up.
pub fn e1_by_apery_delta(h: &NumericalSemigroup) -> Result<i64> {
    let n1 = h.multiplicity();
    let ap = h.apery_multiplicity();
    let ap_blowup = blowup(h).apery_set(n1)?;
    let mut total = 0i64;
    for (i, (&w, &wp)) in ap
        .omegas()
        .iter()
        .zip(ap_blowup.omegas())
        .enumerate()
        .skip(1)
    {
        let delta = w / n1 - wp / n1;
        if delta < 1 {
            return Err(Error::InternalInconsistency(format!(
                "k_{i} - l_{i} = {delta} < 1 for {h}"
            )));
        }
        total += delta;
    }
    Ok(total)
}

/// `#{x in H : ord(x) <= n}`, the length of `R / m^(n+1)`.
pub fn hilbert_function(h: &NumericalSemigroup, n: u32) -> i64 {
    hilbert_values(h, n)[n as usize]
}

/// Hilbert function values for `0..=horizon`. Every `x` of order at most
/// `horizon` satisfies `x <= horizon * ne`, so one order table covers them.
fn hilbert_values(h: &NumericalSemigroup, horizon: u32) -> Vec<i64> {
    let table = h.order_table(i64::from(horizon) * h.largest_generator());
    let mut counts = vec![0i64; horizon as usize + 1];
    for (_, o) in table.members() {
        if o <= horizon {
            counts[o as usize] += 1;
        }
    }
    counts
        .iter()
        .scan(0i64, |acc, c| {
            *acc += c;
            Some(*acc)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HilbertSummary {
    pub e0: i64,
    pub e1: i64,
    pub genus: i64,
    pub blowup_genus: i64,
    pub frobenius: i64,
    /// Smallest `n` from which `e0 (n + 1) - e1` matches the Hilbert function.
    pub stabilization_index: u32,
}

/// `(stabilization index, e1)` read off the Hilbert function: the first `n`
/// where `e0 (n + 1) - HF(n)` stays constant for `n1 + 3` consecutive values.
pub fn e1_from_hilbert_function(h: &NumericalSemigroup) -> (u32, i64) {
    let e0 = h.multiplicity();
    let window = e0 as usize + 3;
    let mut horizon = e0 as u32 + 6;
    loop {
        let hf = hilbert_values(h, horizon);
        let defect: Vec<i64> = hf
            .iter()
            .enumerate()
            .map(|(n, &l)| e0 * (n as i64 + 1) - l)
            .collect();
        let found = (0..defect.len().saturating_sub(window - 1)).find(|&start| {
            defect[start..start + window]
                .iter()
                .all(|&v| v == defect[start])
        });
        if let Some(start) = found {
            return (start as u32, defect[start]);
        }
        horizon *= 2;
    }
}

/// [`e1_from_hilbert_function`] checked against [`e1_by_genus`].
pub fn e1_by_hilbert_poly(h: &NumericalSemigroup) -> Result<HilbertSummary> {
    let e0 = h.multiplicity();
    let (stabilization_index, e1) = e1_from_hilbert_function(h);
    let genus = h.genus_by_gaps();
    let blowup_genus = blowup(h).genus_by_gaps();
    if e1 != genus - blowup_genus {
        return Err(Error::InternalInconsistency(format!(
            "Hilbert function gives e1 = {e1} but g(H) - g(H') = {} for {h}",
            genus - blowup_genus
        )));
    }
    Ok(HilbertSummary {
        e0,
        e1,
        genus,
        blowup_genus,
        frobenius: h.frobenius(),
        stabilization_index,
    })
}

/// `(n1 - 1, n1 (n1 - 1) / 2)`.
pub fn kirby_bounds(h: &NumericalSemigroup) -> (i64, i64) {
    let n1 = h.multiplicity();
    (n1 - 1, n1 * (n1 - 1) / 2)
}

/// `e1 = a (a - 1) / 2` for `<a, b>`.
pub fn e1_two_generated(a: i64, b: i64) -> Result<i64> {
    const NAME: &str = "e1_two_generated";
    if !(1 < a && a < b) || a.gcd(&b) != 1 {
        return Err(Error::precondition(
            NAME,
            "need 1 < a < b with gcd(a, b) = 1",
        ));
    }
    NumericalSemigroup::new(&[a, b]).map_err(|e| Error::precondition(NAME, e.to_string()))?;
    Ok(a * (a - 1) / 2)
}

/// `e1 = n1 - 1` when the embedding dimension equals the multiplicity.
pub fn e1_max_embdim(h: &NumericalSemigroup) -> Result<i64> {
    if h.embedding_dimension() as i64 != h.multiplicity() {
        return Err(Error::precondition(
            "e1_max_embdim",
            format!(
                "embedding dimension {} differs from multiplicity {}",
                h.embedding_dimension(),
                h.multiplicity()
            ),
        ));
    }
    Ok(h.multiplicity() - 1)
}

/// `e1` of `<a, a+d, ..., a+nd>`.
///
/// The Apery set splits into blocks `A_i = {ia + jd}` whose elements each
/// contribute `k - l = i`, which gives
/// `n q (q + 1) / 2 + (r - 1)(q + 1)` with `a = q n + r`, `1 <= r <= n`.
/// The closed form as usually stated is kept alongside for comparison.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ArithmeticE1 {
    /// `a = q n + r`, `0 <= r < n`.
    pub q: i64,
    pub r: i64,
    /// `g(H) - g(<a, d>)`.
    pub value: i64,
    /// `n q (q + 1) / 2` for `r <= 1`, and
    /// `n q (q + 1) / 2 + (r - 1)(2a(q + 1) + 2qn + r) / 2` for `r >= 2`.
    pub stated: i64,
    /// Block count with the remainder taken in `1..=n`.
    pub corrected: i64,
    /// Whether `stated` equals `value`.
    pub formula_verified: bool,
}

pub fn arithmetic_generators(a: i64, d: i64, n: i64) -> Vec<i64> {
    (0..=n).map(|k| a + k * d).collect()
}

pub fn e1_arithmetic(a: i64, d: i64, n: i64) -> Result<ArithmeticE1> {
    const NAME: &str = "e1_arithmetic";
    if a < 1 || d < 1 || n < 1 {
        return Err(Error::precondition(NAME, "a, d, n must be positive"));
    }
    if a.gcd(&d) != 1 {
        return Err(Error::precondition(NAME, "gcd(a, d) != 1"));
    }
    let h = NumericalSemigroup::new(&arithmetic_generators(a, d, n))
        .map_err(|e| Error::precondition(NAME, e.to_string()))?;
    let (q, r) = a.div_rem(&n);
    let (a, n, q, r) = (a as i128, n as i128, q as i128, r as i128);
    let base = n * q * (q + 1) / 2;
    let stated = if r <= 1 {
        base
    } else {
        base + (r - 1) * (2 * a * (q + 1) + 2 * q * n + r) / 2
    };
    let (q1, r1) = if r == 0 { (q - 1, n) } else { (q, r) };
    let corrected = n * q1 * (q1 + 1) / 2 + (r1 - 1) * (q1 + 1);
    let value = e1_by_genus(&h);
    let stated = fit(stated)?;
    Ok(ArithmeticE1 {
        q: q as i64,
        r: r as i64,
        value,
        stated,
        corrected: fit(corrected)?,
        formula_verified: stated == value,
    })
}

/// `e1 = a (a - 1) / 2 - (d - 1)(d q (q - 1) / 2 + r q)` for `<a, a+1, a+d>`,
/// `a = d q + r` with `0 <= r <= d - 1`.
pub fn e1_small_d(a: i64, d: i64, mode: EvalMode) -> Result<i64> {
    if mode.is_strict() {
        small_d_precondition(a, d)?;
    }
    let p = FamilyParams::gap_split(a, d)?;
    let (a, d, q, r) = (a as i128, d as i128, p.q as i128, p.r as i128);
    fit(a * (a - 1) / 2 - (d - 1) * (d * q * (q - 1) / 2 + r * q))
}

/// `e1 = (a^2 + d(d-2)a - r(d-1)(d-r)) / 2d` for `r <= d - 2` and
/// `(a^2 + d(d-2)a - (d-1)^2) / 2d` for `r = d - 1`.
pub fn e1_mainthm(a: i64, d: i64, mode: EvalMode) -> Result<i64> {
    const NAME: &str = "e1_mainthm";
    let p = if mode.is_strict() {
        mainthm_precondition(a, d)?
    } else {
        FamilyParams::gap_split(a, d)?
    };
    let (a, d, r) = (a as i128, d as i128, p.r as i128);
    let lead = a * a + d * (d - 2) * a;
    let correction = if r == d - 1 {
        (d - 1) * (d - 1)
    } else {
        r * (d - 1) * (d - r)
    };
    fit(exact_div(lead - correction, 2 * d, NAME, mode)?)
}

/// `e1` of `<d+1, d+2, 2d+1>`, `d >= 5`: `(d^2 + d + 1) / 3` when
/// `d ≡ 1 (mod 3)` and `(d^2 + d) / 3` otherwise.
pub fn e1_qr1(d: i64, mode: EvalMode) -> Result<i64> {
    const NAME: &str = "e1_qr1";
    if d < 5 && (mode.is_strict() || d < 1) {
        return Err(Error::precondition(NAME, "need d >= 5"));
    }
    let d = d as i128;
    let numerator = if d % 3 == 1 { d * d + d + 1 } else { d * d + d };
    fit(exact_div(numerator, 3, NAME, mode)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const STRICT: EvalMode = EvalMode::Strict;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    #[test]
    fn blowup_examples() {
        assert!(blowup(&sg(&[5, 6, 8])).is_naturals());
        assert_eq!(blowup(&sg(&[5, 7, 9])), sg(&[2, 5]));
        assert!(blowup(&sg(&[2, 3])).is_naturals());
        assert!(blowup(&sg(&[1])).is_naturals());
    }

    #[test]
    fn e1_examples() {
        assert_eq!(e1_by_genus(&sg(&[2, 3])), 1);
        assert_eq!(e1_by_genus(&sg(&[5, 7, 9])), 6);
        assert_eq!(e1_by_genus(&sg(&[7, 8, 12])), 13);
        assert_eq!(e1_by_apery_delta(&sg(&[2, 3])), Ok(1));
        assert_eq!(e1_by_apery_delta(&sg(&[5, 7, 9])), Ok(6));
        assert_eq!(e1_by_apery_delta(&sg(&[6, 7, 11])), Ok(10));
        assert_eq!(e1_by_genus(&sg(&[6, 7, 11])), 10);
    }

    #[test]
    fn hilbert_function_examples() {
        assert_eq!(hilbert_function(&sg(&[5, 6, 8]), 0), 1);
        assert_eq!(hilbert_function(&sg(&[2, 3]), 1), 3);
        assert_eq!(hilbert_function(&sg(&[5, 6, 8]), 1), 4);
        // <2,3>: orders of 0,2,3,4,5,6,.. are 0,1,1,2,2,3,..
        let hf: Vec<i64> = (0..6).map(|n| hilbert_function(&sg(&[2, 3]), n)).collect();
        assert_eq!(hf, vec![1, 3, 5, 7, 9, 11]);
    }

    #[test]
    fn hilbert_poly_examples() {
        let s = e1_by_hilbert_poly(&sg(&[2, 3])).unwrap();
        assert_eq!((s.e0, s.e1, s.stabilization_index), (2, 1, 0));
        assert_eq!(e1_by_hilbert_poly(&sg(&[7, 8, 10])).unwrap().e1, 11);
        assert_eq!(e1_by_hilbert_poly(&sg(&[3, 4, 5])).unwrap().e1, 2);
        let n = e1_by_hilbert_poly(&sg(&[1])).unwrap();
        assert_eq!((n.e0, n.e1, n.frobenius), (1, 0, -1));
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(e1_two_generated(2, 3), Ok(1));
        assert_eq!(e1_two_generated(3, 5), Ok(3));
        assert_eq!(e1_two_generated(5, 7), Ok(10));
        assert!(e1_two_generated(4, 6).is_err());
        assert_eq!(e1_by_genus(&sg(&[3, 5])), 3);
        assert_eq!(e1_by_genus(&sg(&[5, 7])), 10);

        assert_eq!(e1_max_embdim(&sg(&[3, 4, 5])), Ok(2));
        assert_eq!(e1_max_embdim(&sg(&[4, 5, 6, 7])), Ok(3));
        assert_eq!(e1_max_embdim(&sg(&[2, 3])), Ok(1));
        assert!(e1_max_embdim(&sg(&[5, 6, 8])).is_err());
        assert_eq!(e1_by_genus(&sg(&[4, 5, 6, 7])), 3);

        assert_eq!(e1_small_d(7, 5, STRICT), Ok(13));
        assert_eq!(e1_small_d(7, 3, STRICT), Ok(11));
        assert_eq!(e1_small_d(10, 5, STRICT), Ok(25));
        assert_eq!(e1_by_genus(&sg(&[10, 11, 15])), 25);

        assert_eq!(e1_mainthm(7, 3, STRICT), Ok(11));
        assert_eq!(e1_mainthm(5, 3, STRICT), Ok(6));
        assert_eq!(e1_mainthm(8, 3, STRICT), Ok(14));
        assert_eq!(e1_by_genus(&sg(&[8, 9, 11])), 14);

        assert_eq!(e1_qr1(5, STRICT), Ok(10));
        assert_eq!(e1_qr1(6, STRICT), Ok(14));
        assert_eq!(e1_qr1(7, STRICT), Ok(19));
        assert_eq!(e1_by_genus(&sg(&[7, 8, 13])), 14);
        assert_eq!(e1_by_genus(&sg(&[8, 9, 15])), 19);
        assert!(e1_qr1(4, STRICT).is_err());
    }

    #[test]
    fn arithmetic_examples() {
        let e = e1_arithmetic(5, 2, 2).unwrap();
        assert_eq!(
            (e.q, e.r, e.value, e.stated, e.formula_verified),
            (2, 1, 6, 6, true)
        );
        let e = e1_arithmetic(7, 2, 3).unwrap();
        assert_eq!((e.q, e.r, e.value, e.corrected), (2, 1, 9, 9));
        assert_eq!(e1_by_genus(&sg(&[7, 9, 11, 13])), 9);
        let e = e1_arithmetic(8, 1, 3).unwrap();
        assert_eq!(
            (e.q, e.r, e.value, e.corrected, e.formula_verified),
            (2, 2, 12, 12, false)
        );
        let e = e1_arithmetic(5, 1, 3).unwrap();
        assert_eq!((e.value, e.stated, e.corrected), (5, 17, 5));
        // r = 0: the block A_q loses qa + qnd, so the stated value is q too big.
        let e = e1_arithmetic(4, 1, 2).unwrap();
        assert_eq!((e.q, e.r, e.value, e.stated, e.corrected), (2, 0, 4, 6, 4));
        assert!(e1_arithmetic(6, 2, 2).is_err());
    }

    #[test]
    fn kirby_examples() {
        assert_eq!(kirby_bounds(&sg(&[2, 3])), (1, 1));
        assert_eq!(kirby_bounds(&sg(&[7, 8, 10])), (6, 21));
        assert_eq!(kirby_bounds(&sg(&[3, 4, 5])), (2, 3));
    }
}
