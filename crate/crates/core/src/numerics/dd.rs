//! Just enough double-double arithmetic to measure sub-ulp offsets.

/// `a + b = s + e` exactly.
pub(crate) fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

fn quick_two_sum(a: f64, b: f64) -> Dd {
    let s = a + b;
    Dd(s, b - (s - a))
}

/// Unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) struct Dd(pub f64, pub f64);

const LN_2: Dd = Dd(core::f64::consts::LN_2, 2.319_046_813_846_299_6e-17);

impl Dd {
    fn add(self, b: Dd) -> Dd {
        let (s, e) = two_sum(self.0, b.0);
        quick_two_sum(s, e + self.1 + b.1)
    }

    fn mul(self, b: Dd) -> Dd {
        let p = self.0 * b.0;
        let e = libm::fma(self.0, b.0, -p) + (self.0 * b.1 + self.1 * b.0);
        quick_two_sum(p, e)
    }

    fn div(self, b: Dd) -> Dd {
        let q1 = self.0 / b.0;
        let r = self.add(b.mul(Dd(-q1, 0.0)));
        quick_two_sum(q1, r.0 / b.0)
    }

    pub(crate) fn scale(self, k: f64) -> Dd {
        self.mul(Dd(k, 0.0))
    }

    pub(crate) fn value(self) -> f64 {
        self.0 + self.1
    }
}

/// `ln x` for `x ∈ [1/2, 2]` to roughly `1e−30`, by the series of
/// `2 atanh((x − 1)/(x + 1))`.
pub(crate) fn ln(x: f64) -> Dd {
    debug_assert!((0.5..=2.0).contains(&x));
    // x − 1 is exact on this range.
    let (d_hi, d_lo) = two_sum(x, 1.0);
    let z = Dd(x - 1.0, 0.0).div(Dd(d_hi, d_lo));
    let z2 = z.mul(z);
    let mut term = z;
    let mut sum = z;
    let mut k = 1.0;
    while libm::fabs(term.0) > 1e-34 {
        term = term.mul(z2);
        k += 2.0;
        sum = sum.add(term.div(Dd(k, 0.0)));
    }
    sum.scale(2.0)
}

/// `ln(x · 2^(1/a))`, the relative offset of `x` from `2^(−1/a)`, scaled by `a`:
/// `a ln x + ln 2`.
pub(crate) fn ln_offset_from_root_half(x: f64, a: f64) -> f64 {
    ln(x).scale(a).add(LN_2).value()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ln_of_half_is_minus_ln_2() {
        let l = ln(0.5);
        assert_eq!(l.0, -LN_2.0);
        assert!((l.1 + LN_2.1).abs() < 1e-31);
    }

    #[test]
    fn offset_of_rounded_root() {
        // 2^(−1/2) rounds up by about 4.83e−17, a relative offset of 6.84e−17.
        let eta = ln_offset_from_root_half(libm::exp2(-0.5), 2.0);
        assert!((eta / 2.0 - 6.835_808_657_661_923e-17).abs() < 1e-30, "{eta:e}");
    }
}
