//! Closed forms for the Apery sets and Frobenius numbers of the families
//! `<a, a+1, b>` and `<a, a+1, a+d>`.
//!
//! Every formula validates its own precondition. [`EvalMode::Permissive`]
//! skips that validation so sweeps can measure where a formula stops
//! agreeing with the oracles; structural errors (index out of range,
//! non-integral results) are still reported.

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::semigroup::NumericalSemigroup;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum EvalMode {
    #[default]
    Strict,
    /// Evaluate even when the precondition fails.
    Permissive,
}

impl EvalMode {
    pub fn is_strict(self) -> bool {
        self == EvalMode::Strict
    }
}

/// Which Euclidean decomposition a [`FamilyParams`] carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Split {
    /// `b = a q + r` with `1 <= r <= a - 1`.
    ThirdGenerator,
    /// `a = d q + r` with `0 <= r <= d - 1`, where `d = b - a`.
    Gap,
}

/// Parameters of `<a, a+1, b>` together with one Euclidean decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    pub a: i64,
    pub b: i64,
    pub q: i64,
    pub r: i64,
    pub split: Split,
}

impl FamilyParams {
    pub fn d(&self) -> i64 {
        self.b - self.a
    }

    pub fn generators(&self) -> [i64; 3] {
        [self.a, self.a + 1, self.b]
    }

    /// Decomposition `a = d q + r` for `<a, a+1, a+d>`; no validity check
    /// beyond positivity.
    pub fn gap_split(a: i64, d: i64) -> Result<Self> {
        if a < 1 || d < 1 {
            return Err(Error::precondition("gap_split", "a and d must be positive"));
        }
        let (q, r) = a.div_rem(&d);
        Ok(Self {
            a,
            b: a.checked_add(d).ok_or_else(|| Error::overflow("a + d"))?,
            q,
            r,
            split: Split::Gap,
        })
    }

    /// `omega_i = i(a+1) - floor(i/r)(r(a+1) - b)`, valid when the Apery
    /// sequence with respect to `a` is increasing.
    pub fn apery_increasing(&self, i: i64) -> Result<i64> {
        self.check_index(i)?;
        let (a, b, r) = (
            self.a as i128,
            self.b as i128,
            self.third_generator_r() as i128,
        );
        let i = i as i128;
        fit(i * (a + 1) - (i / r) * (r * (a + 1) - b))
    }

    /// `omega_i = i(a+1) + a * min_{0<=j<=r} (j(a+1) - (r-q) floor((ja+i)/r))`.
    pub fn apery_min(&self, i: i64) -> Result<i64> {
        self.check_index(i)?;
        let (a, q, r) = self.third_generator_qr();
        let (a, q, r, i) = (a as i128, q as i128, r as i128, i as i128);
        let inner = (0..=r)
            .map(|j| j * (a + 1) - (r - q) * ((j * a + i) / r))
            .min()
            .expect("range is nonempty");
        fit(i * (a + 1) + a * inner)
    }

    /// All `a` values of [`FamilyParams::apery_min`].
    pub fn apery_min_table(&self) -> Result<Vec<i64>> {
        (0..self.a).map(|i| self.apery_min(i)).collect()
    }

    fn check_index(&self, i: i64) -> Result<()> {
        if (0..self.a).contains(&i) {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange {
                index: i,
                len: self.a,
            })
        }
    }

    fn third_generator_qr(&self) -> (i64, i64, i64) {
        match self.split {
            Split::ThirdGenerator => (self.a, self.q, self.r),
            Split::Gap => {
                let (q, r) = self.b.div_rem(&self.a);
                (self.a, q, r)
            }
        }
    }

    fn third_generator_r(&self) -> i64 {
        self.third_generator_qr().2
    }
}

/// Decomposes `b = a q + r` for a minimally generated `<a, a+1, b>` and
/// checks `q < r` and `b < r(a+1)`.
pub fn family_decompose(a: i64, b: i64) -> Result<FamilyParams> {
    const NAME: &str = "family_decompose";
    if a < 2 || b <= a + 1 {
        return Err(Error::precondition(NAME, "need 2 <= a and a + 1 < b"));
    }
    let h = NumericalSemigroup::new(&[a, a + 1, b])
        .map_err(|e| Error::precondition(NAME, e.to_string()))?;
    debug_assert_eq!(h.embedding_dimension(), 3);
    let (q, r) = b.div_rem(&a);
    if !(q < r && (b as i128) < r as i128 * (a as i128 + 1)) {
        return Err(Error::InternalInconsistency(format!(
            "minimal <{a},{a_1},{b}> violates q < r or b < r(a+1)",
            a_1 = a + 1
        )));
    }
    Ok(FamilyParams {
        a,
        b,
        q,
        r,
        split: Split::ThirdGenerator,
    })
}

pub fn apery_increasing_formula(a: i64, b: i64, i: i64) -> Result<i64> {
    family_decompose(a, b)?.apery_increasing(i)
}

pub fn apery_min_formula(a: i64, b: i64, i: i64) -> Result<i64> {
    family_decompose(a, b)?.apery_min(i)
}

/// Frobenius number of `<a, a+1, aq+q+1>`: `a^2 - a - 1 - floor((a-1)/(q+1)) a`.
pub fn frobenius_special_b(a: i64, q: i64, mode: EvalMode) -> Result<i64> {
    const NAME: &str = "frobenius_special_b";
    if mode.is_strict() {
        if !(0 < q && q < a) {
            return Err(Error::precondition(NAME, "need 0 < q < a"));
        }
        let b = a
            .checked_mul(q)
            .and_then(|v| v.checked_add(q + 1))
            .ok_or_else(|| Error::overflow("aq + q + 1"))?;
        family_decompose(a, b).map_err(|e| Error::precondition(NAME, e.to_string()))?;
    } else if q < 0 {
        return Err(Error::precondition(NAME, "q must be nonnegative"));
    }
    let (a, q) = (a as i128, q as i128);
    fit(a * a - a - 1 - ((a - 1) / (q + 1)) * a)
}

/// `1 < d < a`, and either `a >= d^2 - 3d` or `d = 5, a >= 7`.
pub fn small_d_precondition(a: i64, d: i64) -> Result<()> {
    const NAME: &str = "small_d";
    if !(1 < d && d < a) {
        return Err(Error::precondition(NAME, "need 1 < d < a"));
    }
    let threshold = d as i128 * d as i128 - 3 * d as i128;
    if (a as i128) < threshold && !(d == 5 && a >= 7) {
        return Err(Error::precondition(
            NAME,
            format!("a = {a} is below d^2 - 3d = {threshold}"),
        ));
    }
    Ok(())
}

/// `omega_i = i(a+1) - (d-1) a floor(i/d)` for `<a, a+1, a+d>`.
pub fn apery_small_d(a: i64, d: i64, i: i64, mode: EvalMode) -> Result<i64> {
    if mode.is_strict() {
        small_d_precondition(a, d)?;
    } else if d < 1 {
        return Err(Error::precondition("apery_small_d", "d must be positive"));
    }
    if !(0..a).contains(&i) {
        return Err(Error::IndexOutOfRange { index: i, len: a });
    }
    Ok(apery_small_d_unchecked(a, d, i))
}

fn apery_small_d_unchecked(a: i64, d: i64, i: i64) -> i64 {
    i * (a + 1) - (d - 1) * a * (i / d)
}

/// `max_{1<=i<a} omega_i - a` with the small-`d` Apery formula.
pub fn frobenius_small_d(a: i64, d: i64, mode: EvalMode) -> Result<i64> {
    if mode.is_strict() {
        small_d_precondition(a, d)?;
    } else if d < 1 || a < 2 {
        return Err(Error::precondition(
            "frobenius_small_d",
            "need d >= 1 and a >= 2",
        ));
    }
    let max = (1..a)
        .map(|i| apery_small_d_unchecked(a, d, i))
        .max()
        .expect("a >= 2");
    Ok(max - a)
}

/// Piecewise Frobenius number of `<a, a+1, a+5>` for `a >= 7`.
pub fn frobenius_d5(a: i64, mode: EvalMode) -> Result<i64> {
    if a < 7 && (mode.is_strict() || a < 1) {
        return Err(Error::precondition("frobenius_d5", "need a >= 7"));
    }
    let (m, s) = a.div_rem(&5);
    let base = m * (a + 5) + 2 * a;
    Ok(if s == 4 { base + 3 } else { base - 1 })
}

/// Arithmetic part of the `q + r >= d - 2` precondition: `a >= 3`, `d >= 2`,
/// `gcd(a, d) = 1`, `1 <= r <= d - 1` and `q + r >= d - 2`.
pub fn mainthm_split(a: i64, d: i64) -> Result<FamilyParams> {
    const NAME: &str = "mainthm";
    if a < 3 || d < 2 {
        return Err(Error::precondition(NAME, "need a >= 3 and d >= 2"));
    }
    if a.gcd(&d) != 1 {
        return Err(Error::precondition(NAME, "gcd(a, d) != 1"));
    }
    let p = FamilyParams::gap_split(a, d)?;
    if !(1..d).contains(&p.r) {
        return Err(Error::precondition(NAME, "remainder outside 1..d-1"));
    }
    if p.q + p.r < d - 2 {
        return Err(Error::precondition(NAME, "q + r < d - 2"));
    }
    Ok(p)
}

/// Full precondition of the Frobenius and e1 formulas for `<a, a+1, a+d>`
/// with `q + r >= d - 2`: [`mainthm_split`], plus the semigroup is valid and
/// not symmetric (checked on the oracle).
pub fn mainthm_precondition(a: i64, d: i64) -> Result<FamilyParams> {
    const NAME: &str = "mainthm";
    let p = mainthm_split(a, d)?;
    let h = NumericalSemigroup::new(&p.generators())
        .map_err(|e| Error::precondition(NAME, e.to_string()))?;
    if h.is_symmetric() {
        return Err(Error::precondition(NAME, "semigroup is symmetric"));
    }
    Ok(p)
}

/// Frobenius number of `<a, a+1, a+d>` when `q + r >= d - 2`:
/// `(a^2 + (d^2-2d-r) a)/d - (r+1)` for `r <= d-2`,
/// `(a^2 + (d^2-3d+1) a)/d - 1` for `r = d-1`.
pub fn frobenius_mainthm(a: i64, d: i64, mode: EvalMode) -> Result<i64> {
    const NAME: &str = "frobenius_mainthm";
    let p = if mode.is_strict() {
        mainthm_precondition(a, d)?
    } else {
        FamilyParams::gap_split(a, d)?
    };
    let (a, d, r) = (a as i128, d as i128, p.r as i128);
    if r == d - 1 {
        let v = exact_div(a * a + (d * d - 3 * d + 1) * a, d, NAME, mode)?;
        fit(v - 1)
    } else {
        let v = exact_div(a * a + (d * d - 2 * d - r) * a, d, NAME, mode)?;
        fit(v - (r + 1))
    }
}

/// Frobenius number of `<d+1, d+2, 2d+1>` for `d >= 5`, by `d mod 3`.
pub fn frobenius_qr1(d: i64, mode: EvalMode) -> Result<i64> {
    const NAME: &str = "frobenius_qr1";
    if d < 5 && (mode.is_strict() || d < 1) {
        return Err(Error::precondition(NAME, "need d >= 5"));
    }
    let d = d as i128;
    let numerator = match d % 3 {
        0 => 2 * d * d + d - 3,
        1 => 2 * d * d + 2 * d - 1,
        _ => 2 * d * d - 2,
    };
    fit(exact_div(numerator, 3, NAME, mode)?)
}

pub(crate) fn fit(v: i128) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::overflow(format!("{v} does not fit in 64 bits")))
}

pub(crate) fn exact_div(
    num: i128,
    den: i128,
    formula: &'static str,
    mode: EvalMode,
) -> Result<i128> {
    if num % den == 0 {
        Ok(num / den)
    } else if mode.is_strict() {
        Err(Error::InternalInconsistency(format!(
            "{formula}: {num} is not divisible by {den}"
        )))
    } else {
        Err(Error::precondition(
            formula,
            format!("non-integral value {num}/{den}"),
        ))
    }
}
