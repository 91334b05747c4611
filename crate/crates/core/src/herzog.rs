//! Defining ideals of non-symmetric three-generated semigroup rings.
//!
//! For `H = <n1, n2, n3>` not symmetric, the kernel of
//! `k[[x, y, z]] -> k[[H]]` is generated by the 2x2 minors of
//!
//! ```text
//! | y^beta'  z^gamma'  x^alpha' |
//! | x^alpha  y^beta    z^gamma  |
//! ```
//!
//! and [`HerzogData`] holds those six exponents.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::closed_forms::{mainthm_split, EvalMode};
use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HerzogData {
    pub alpha: i64,
    pub beta: i64,
    pub gamma: i64,
    pub alpha_p: i64,
    pub beta_p: i64,
    pub gamma_p: i64,
}

impl HerzogData {
    pub fn c1(&self) -> i64 {
        self.alpha + self.alpha_p
    }

    pub fn c2(&self) -> i64 {
        self.beta + self.beta_p
    }

    pub fn c3(&self) -> i64 {
        self.gamma + self.gamma_p
    }

    /// `(alpha, beta, gamma, alpha', beta', gamma')`.
    pub fn as_tuple(&self) -> (i64, i64, i64, i64, i64, i64) {
        (
            self.alpha,
            self.beta,
            self.gamma,
            self.alpha_p,
            self.beta_p,
            self.gamma_p,
        )
    }

    pub fn all_positive(&self) -> bool {
        let (a, b, c, ap, bp, cp) = self.as_tuple();
        [a, b, c, ap, bp, cp].iter().all(|&v| v > 0)
    }

    /// The three binomials vanish under the grading by `gens`:
    /// `c1 n1 = beta' n2 + gamma n3`, `c2 n2 = alpha n1 + gamma' n3`,
    /// `c3 n3 = alpha' n1 + beta n2`.
    pub fn degree_identities_hold(&self, gens: [i64; 3]) -> bool {
        let [n1, n2, n3] = gens.map(i128::from);
        let v = |x: i64| i128::from(x);
        v(self.c1()) * n1 == v(self.beta_p) * n2 + v(self.gamma) * n3
            && v(self.c2()) * n2 == v(self.alpha) * n1 + v(self.gamma_p) * n3
            && v(self.c3()) * n3 == v(self.alpha_p) * n1 + v(self.beta) * n2
    }

    fn checked_against(self, gens: [i64; 3]) -> Result<Self> {
        if self.degree_identities_hold(gens) {
            Ok(self)
        } else {
            Err(Error::InternalInconsistency(format!(
                "{self:?} fails the degree identities for {gens:?}"
            )))
        }
    }
}

fn three_generators(h: &NumericalSemigroup) -> Result<[i64; 3]> {
    <[i64; 3]>::try_from(h.generators())
        .map_err(|_| Error::NotThreeGenerated(h.embedding_dimension()))
}

/// Least `u >= 0` with `u * left ≡ target (mod right)`, if any.
fn least_left_coefficient(target: i64, left: i64, right: i64) -> Option<i64> {
    let g = left.gcd(&right);
    if target % g != 0 {
        return None;
    }
    let (l, m, t) = (left / g, right / g, target / g);
    if m == 1 {
        return Some(0);
    }
    // l is invertible modulo m.
    let ext = l.rem_euclid(m).extended_gcd(&m);
    let inv = ext.x.rem_euclid(m);
    Some(((t.rem_euclid(m) as i128 * inv as i128) % m as i128) as i64)
}

/// Whether `target` is a nonnegative combination of `left` and `right`.
fn in_two_generated(target: i64, left: i64, right: i64) -> bool {
    least_left_coefficient(target, left, right)
        .is_some_and(|u| u as i128 * left as i128 <= target as i128)
}

/// Least `k > 0` with `k * n` in `<left, right>`; `k = min(left, right)`
/// always works.
fn column_degree(n: i64, left: i64, right: i64) -> Result<i64> {
    (1..=left.min(right))
        .find(|&k| in_two_generated(k * n, left, right))
        .ok_or_else(|| {
            Error::InternalInconsistency(format!("no multiple of {n} in <{left},{right}>"))
        })
}

/// The unique `(u, v)`, both positive, with `u * left + v * right = target`.
fn positive_decomposition(target: i64, left: i64, right: i64) -> Result<(i64, i64)> {
    let none = || Error::NoPositiveDecomposition {
        degree: target,
        left,
        right,
    };
    let start = least_left_coefficient(target, left, right).ok_or_else(none)?;
    let step = right / left.gcd(&right);
    let mut found = None;
    let mut u = if start == 0 { step } else { start };
    while u * left < target {
        let v = (target - u * left) / right;
        if found.replace((u, v)).is_some() {
            return Err(none());
        }
        u += step;
    }
    found.ok_or_else(none)
}

/// Herzog parameters of a non-symmetric semigroup of embedding dimension 3.
pub fn herzog_parameters(h: &NumericalSemigroup) -> Result<HerzogData> {
    let gens @ [n1, n2, n3] = three_generators(h)?;
    if h.is_symmetric() {
        return Err(Error::SymmetricInput);
    }
    let c1 = column_degree(n1, n2, n3)?;
    let c2 = column_degree(n2, n1, n3)?;
    let c3 = column_degree(n3, n1, n2)?;
    let (beta_p, gamma) = positive_decomposition(c1 * n1, n2, n3)?;
    let (alpha, gamma_p) = positive_decomposition(c2 * n2, n1, n3)?;
    let (alpha_p, beta) = positive_decomposition(c3 * n3, n1, n2)?;
    let data = HerzogData {
        alpha,
        beta,
        gamma,
        alpha_p,
        beta_p,
        gamma_p,
    };
    if (data.c1(), data.c2(), data.c3()) != (c1, c2, c3) {
        return Err(Error::InternalInconsistency(format!(
            "{data:?} does not reproduce column degrees ({c1},{c2},{c3}) of {h}"
        )));
    }
    data.checked_against(gens)
}

/// The matrix `| y^r z x^(q+r+2-d) ; x^(d-1) y^(d-r) z^q |` of
/// `<a, a+1, a+d>` for `a = dq + r`, `q + r >= d - 2`.
pub fn matrix_mainthm(a: i64, d: i64, mode: EvalMode) -> Result<HerzogData> {
    let p = if mode.is_strict() {
        mainthm_split(a, d)?
    } else {
        crate::closed_forms::FamilyParams::gap_split(a, d)?
    };
    let (q, r) = (p.q, p.r);
    let data = HerzogData {
        alpha: d - 1,
        beta: d - r,
        gamma: q,
        alpha_p: q + r + 2 - d,
        beta_p: r,
        gamma_p: 1,
    };
    if mode.is_strict() {
        data.checked_against(p.generators())
    } else {
        Ok(data)
    }
}

/// The matrices of `<d+1, d+2, 2d+1>`, `d >= 5`, by `d mod 3`. For
/// `d ≡ 1` the lower-left entry is the unit, so `alpha = 0`.
pub fn matrix_qr1(d: i64) -> Result<HerzogData> {
    if d < 5 {
        return Err(Error::precondition("matrix_qr1", "need d >= 5"));
    }
    let data = match d % 3 {
        0 => HerzogData {
            alpha: 2,
            beta: 2 * d / 3,
            gamma: 1,
            alpha_p: 1,
            beta_p: 1,
            gamma_p: d / 3,
        },
        1 => HerzogData {
            alpha: 0,
            beta: (2 * d - 2) / 3,
            gamma: 1,
            alpha_p: 3,
            beta_p: 1,
            gamma_p: (d + 2) / 3,
        },
        _ => HerzogData {
            alpha: 1,
            beta: (2 * d - 1) / 3,
            gamma: 1,
            alpha_p: 2,
            beta_p: 1,
            gamma_p: (d + 1) / 3,
        },
    };
    data.checked_against([d + 1, d + 2, 2 * d + 1])
}

/// Which case of the parameter formulas applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParameterCase {
    /// `beta' n2 > alpha n1`
    BetaDominates,
    /// `beta' n2 < alpha n1`
    AlphaDominates,
}

pub fn parameter_case(h: &NumericalSemigroup, p: &HerzogData) -> Result<ParameterCase> {
    let [n1, n2, _] = three_generators(h)?;
    let lhs = p.beta_p * n2;
    let rhs = p.alpha * n1;
    match lhs.cmp(&rhs) {
        std::cmp::Ordering::Greater => Ok(ParameterCase::BetaDominates),
        std::cmp::Ordering::Less => Ok(ParameterCase::AlphaDominates),
        std::cmp::Ordering::Equal => Err(Error::TieUndefined(lhs)),
    }
}

/// `max(beta' n2, alpha n1) + (gamma + gamma') n3 - (n1 + n2 + n3)`.
pub fn frobenius_from_parameters(h: &NumericalSemigroup, p: &HerzogData) -> Result<i64> {
    let [n1, n2, n3] = three_generators(h)?;
    let lead = match parameter_case(h, p)? {
        ParameterCase::BetaDominates => p.beta_p * n2,
        ParameterCase::AlphaDominates => p.alpha * n1,
    };
    Ok(lead + p.c3() * n3 - (n1 + n2 + n3))
}

/// `(alpha beta gamma + F + 1) / 2` when `beta' n2 > alpha n1`, and
/// `(alpha' beta' gamma' + F + 1) / 2` otherwise.
pub fn genus_from_parameters(h: &NumericalSemigroup, p: &HerzogData) -> Result<i64> {
    let f = frobenius_from_parameters(h, p)?;
    let product = match parameter_case(h, p)? {
        ParameterCase::BetaDominates => p.alpha * p.beta * p.gamma,
        ParameterCase::AlphaDominates => p.alpha_p * p.beta_p * p.gamma_p,
    };
    let numerator = product + f + 1;
    if numerator % 2 != 0 {
        return Err(Error::InternalInconsistency(format!(
            "odd genus numerator {numerator} for {h}"
        )));
    }
    Ok(numerator / 2)
}

/// Whether the associated graded ring of `k[[H]]` is Cohen-Macaulay, i.e.
/// the initial form of `t^n1` is a nonzerodivisor:
/// `ord(x + n1) = ord(x) + 1` for every `x` in `H`.
///
/// A violation has `ord(x + n1)` at most the reduction number, which is at
/// most `n1 - 1`, so `x + n1 <= (n1 - 1) ne` and a finite table suffices.
pub fn graded_cm_oracle(h: &NumericalSemigroup) -> bool {
    let n1 = h.multiplicity();
    let bound = (n1 - 1) * h.largest_generator();
    let table = h.order_table(bound);
    let holds = table
        .members()
        .take_while(|&(x, _)| x + n1 <= bound)
        .all(|(x, o)| table.get(x + n1) == Some(o + 1));
    holds
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CmVerdict {
    CohenMacaulay,
    NotCohenMacaulay,
    Undetermined,
}

impl CmVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            CmVerdict::CohenMacaulay => "CM",
            CmVerdict::NotCohenMacaulay => "NotCM",
            CmVerdict::Undetermined => "Undetermined",
        }
    }
}

/// `beta + beta' = alpha + gamma'` gives CM and `beta + beta' > alpha + gamma'`
/// gives not CM; the remaining case is left undetermined.
pub fn graded_cm_from_parameters(p: &HerzogData) -> CmVerdict {
    let left = p.beta + p.beta_p;
    let right = p.alpha + p.gamma_p;
    match left.cmp(&right) {
        std::cmp::Ordering::Equal => CmVerdict::CohenMacaulay,
        std::cmp::Ordering::Greater => CmVerdict::NotCohenMacaulay,
        std::cmp::Ordering::Less => CmVerdict::Undetermined,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sg(g: &[i64]) -> NumericalSemigroup {
        NumericalSemigroup::new(g).unwrap()
    }

    fn tuple(a: i64, b: i64, c: i64, ap: i64, bp: i64, cp: i64) -> HerzogData {
        HerzogData {
            alpha: a,
            beta: b,
            gamma: c,
            alpha_p: ap,
            beta_p: bp,
            gamma_p: cp,
        }
    }

    #[test]
    fn parameter_examples() {
        assert_eq!(
            herzog_parameters(&sg(&[5, 6, 8])),
            Ok(tuple(2, 1, 1, 2, 2, 1))
        );
        assert_eq!(
            herzog_parameters(&sg(&[7, 8, 10])),
            Ok(tuple(2, 2, 2, 2, 1, 1))
        );
        assert_eq!(
            herzog_parameters(&sg(&[6, 7, 11])),
            Ok(tuple(1, 3, 1, 2, 1, 2))
        );
        assert_eq!(
            herzog_parameters(&sg(&[3, 5, 7])).map(|p| p.all_positive()),
            Ok(true)
        );
        // c3 = 2: 22 = 5 * 3 + 7 exceeds 3 * 7.
        assert_eq!(
            herzog_parameters(&sg(&[3, 7, 11])),
            Ok(tuple(1, 1, 1, 5, 1, 1))
        );
    }

    #[test]
    fn parameter_errors() {
        assert_eq!(
            herzog_parameters(&sg(&[2, 3])),
            Err(Error::NotThreeGenerated(2))
        );
        // <4,5,6> is symmetric.
        assert_eq!(
            herzog_parameters(&sg(&[4, 5, 6])),
            Err(Error::SymmetricInput)
        );
    }

    #[test]
    fn two_generated_membership() {
        for left in 1..15 {
            for right in 1..15 {
                for t in 0..120 {
                    let brute = (0..=t / left).any(|u| (t - u * left) % right == 0);
                    assert_eq!(
                        in_two_generated(t, left, right),
                        brute,
                        "{t} in <{left},{right}>"
                    );
                }
            }
        }
    }

    #[test]
    fn mainthm_matrix_examples() {
        let strict = EvalMode::Strict;
        assert_eq!(matrix_mainthm(7, 3, strict), Ok(tuple(2, 2, 2, 2, 1, 1)));
        assert_eq!(matrix_mainthm(5, 3, strict), Ok(tuple(2, 1, 1, 2, 2, 1)));
        assert_eq!(matrix_mainthm(8, 3, strict), Ok(tuple(2, 1, 2, 3, 2, 1)));
        assert!(tuple(2, 1, 2, 3, 2, 1).degree_identities_hold([8, 9, 11]));
        assert!(matrix_mainthm(6, 5, strict).is_err());
    }

    #[test]
    fn qr1_matrix_examples() {
        assert_eq!(matrix_qr1(5), Ok(tuple(1, 3, 1, 2, 1, 2)));
        assert_eq!(matrix_qr1(6), Ok(tuple(2, 4, 1, 1, 1, 2)));
        assert_eq!(matrix_qr1(7), Ok(tuple(0, 4, 1, 3, 1, 3)));
        assert!(matrix_qr1(4).is_err());
        for d in 5..=60 {
            assert!(matrix_qr1(d).is_ok(), "d = {d}");
        }
    }

    #[test]
    fn frobenius_and_genus_examples() {
        for (gens, f, g) in [
            ([5, 6, 8], 9, 6),
            ([7, 8, 10], 19, 11),
            ([6, 7, 11], 16, 10),
        ] {
            let h = sg(&gens);
            let p = herzog_parameters(&h).unwrap();
            assert_eq!(frobenius_from_parameters(&h, &p), Ok(f));
            assert_eq!(genus_from_parameters(&h, &p), Ok(g));
        }
        let h = sg(&[7, 8, 10]);
        assert_eq!(
            parameter_case(&h, &tuple(2, 2, 2, 2, 1, 1)),
            Ok(ParameterCase::AlphaDominates)
        );
        // A hand-built tie: beta' * 8 = alpha * 7 = 56.
        assert_eq!(
            frobenius_from_parameters(&h, &tuple(8, 1, 1, 1, 7, 1)),
            Err(Error::TieUndefined(56))
        );
    }

    #[test]
    fn cm_examples() {
        assert!(graded_cm_oracle(&sg(&[7, 8, 10])));
        assert!(!graded_cm_oracle(&sg(&[6, 7, 11])));
        assert!(graded_cm_oracle(&sg(&[2, 3])));
        assert!(graded_cm_oracle(&sg(&[1])));
        assert_eq!(
            graded_cm_from_parameters(&tuple(2, 2, 2, 2, 1, 1)),
            CmVerdict::CohenMacaulay
        );
        assert_eq!(
            graded_cm_from_parameters(&tuple(1, 3, 1, 2, 1, 2)),
            CmVerdict::NotCohenMacaulay
        );
        assert_eq!(
            graded_cm_from_parameters(&tuple(2, 1, 1, 2, 2, 1)),
            CmVerdict::CohenMacaulay
        );
        assert_eq!(
            graded_cm_from_parameters(&tuple(3, 1, 1, 1, 1, 1)),
            CmVerdict::Undetermined
        );
    }

    // Checking ord(w + n1) = ord(w) + 1 only on the Apery set is strictly
    // weaker than the nonzerodivisor condition.
    #[test]
    fn cm_oracle_checks_beyond_the_apery_set() {
        let mut weaker_disagrees = 0;
        for n3 in 4..=40i64 {
            for n2 in 3..n3 {
                for n1 in 2..n2 {
                    let Ok(h) = NumericalSemigroup::new(&[n1, n2, n3]) else {
                        continue;
                    };
                    let full = graded_cm_oracle(&h);
                    let table = h.order_table((n1 + 1) * n3 * 2);
                    let apery_only = h
                        .apery_multiplicity()
                        .omegas()
                        .iter()
                        .all(|&w| table.get(w + n1) == table.get(w).map(|o| o + 1));
                    // The full condition implies the Apery-only one.
                    assert!(!full || apery_only);
                    if full != apery_only {
                        weaker_disagrees += 1;
                    }
                }
            }
        }
        assert!(weaker_disagrees > 0);
    }
}
