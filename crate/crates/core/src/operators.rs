//! Finite difference operators for the point value update.
//!
//! Each operator takes a pre-gathered sample window (interface and
//! cell-centered values around the evaluation point) and returns the
//! derivative approximation there. Gathering, ghost fill, and the choice of
//! which samples are interfaces versus reconstructed cell centers is the
//! scheme assembly's job; the kernels here are pure arithmetic.
//!
//! Offsets are in units of `dx` relative to the evaluation point:
//!
//! - `d4_plus`:    samples at (-1, -1/2, 0, +1/2), weights (1, -6, 3, 2)/3
//! - `d4_minus`:   samples at (-1/2, 0, +1/2, +1), weights (-2, -3, 6, -1)/3
//! - `d4_central`: samples at (-1, -1/2, +1/2, +1), weights (1, -8, 8, -1)/6
//! - `d3_plus`:    samples at (-1, -1/2, 0), weights (1, -4, 3)
//! - `d3_minus`:   samples at (0, +1/2, +1), weights (-3, 4, -1)
//! - `d3_central`: samples at (-1, -1/2, +1/2, +1), weights (1, -4, 4, -1)/2
//!
//! The 4th-order operators differentiate cubics exactly; the 3rd-order ones
//! quadratics. All weight sets sum to zero.

/// Which point-update operator family drives the scheme.
///
/// `Central4` is the default everywhere; the others exist for stability and
/// accuracy comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum SchemeVariant {
    #[default]
    Central4,
    Alternating4,
    Central3,
    Alternating3,
}

impl SchemeVariant {
    pub const ALL: [SchemeVariant; 4] = [
        SchemeVariant::Central4,
        SchemeVariant::Alternating4,
        SchemeVariant::Central3,
        SchemeVariant::Alternating3,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            SchemeVariant::Central4 => "central4",
            SchemeVariant::Alternating4 => "alternating4",
            SchemeVariant::Central3 => "central3",
            SchemeVariant::Alternating3 => "alternating3",
        }
    }
}

/// A derivative stencil: half-integer offsets (in units of `dx`), integer
/// numerator weights, and the common denominator. The result scales by
/// `1/(denominator * dx)`; integer weights make the zero-sum property exact.
#[derive(Debug, Clone)]
pub struct StencilWeights {
    pub offsets: &'static [f64],
    pub weights: &'static [f64],
    pub denominator: f64,
}

impl StencilWeights {
    pub fn apply(&self, samples: &[f64], dx: f64) -> f64 {
        debug_assert_eq!(samples.len(), self.weights.len());
        let mut acc = 0.0;
        for (w, z) in self.weights.iter().zip(samples) {
            acc += w * z;
        }
        acc / (self.denominator * dx)
    }
}

pub const D4_PLUS: StencilWeights = StencilWeights {
    offsets: &[-1.0, -0.5, 0.0, 0.5],
    weights: &[1.0, -6.0, 3.0, 2.0],
    denominator: 3.0,
};

pub const D4_MINUS: StencilWeights = StencilWeights {
    offsets: &[-0.5, 0.0, 0.5, 1.0],
    weights: &[-2.0, -3.0, 6.0, -1.0],
    denominator: 3.0,
};

pub const D4_CENTRAL: StencilWeights = StencilWeights {
    offsets: &[-1.0, -0.5, 0.5, 1.0],
    weights: &[1.0, -8.0, 8.0, -1.0],
    denominator: 6.0,
};

pub const D3_PLUS: StencilWeights = StencilWeights {
    offsets: &[-1.0, -0.5, 0.0],
    weights: &[1.0, -4.0, 3.0],
    denominator: 1.0,
};

pub const D3_MINUS: StencilWeights = StencilWeights {
    offsets: &[0.0, 0.5, 1.0],
    weights: &[-3.0, 4.0, -1.0],
    denominator: 1.0,
};

pub const D3_CENTRAL: StencilWeights = StencilWeights {
    offsets: &[-1.0, -0.5, 0.5, 1.0],
    weights: &[1.0, -4.0, 4.0, -1.0],
    denominator: 2.0,
};

/// One-sided 4th-order operator `(z1 - 6 z2 + 3 z3 + 2 z4) / (3 dx)` with
/// samples at offsets (-1, -1/2, 0, +1/2) * dx.
#[inline]
pub fn d4_plus(samples: [f64; 4], dx: f64) -> f64 {
    let [z1, z2, z3, z4] = samples;
    (z1 - 6.0 * z2 + 3.0 * z3 + 2.0 * z4) / (3.0 * dx)
}

/// Mirror-symmetric one-sided operator `(-2 z1 - 3 z2 + 6 z3 - z4) / (3 dx)`
/// with samples at offsets (-1/2, 0, +1/2, +1) * dx. Evaluated as the negated
/// reverse of `d4_plus`, which makes the mirror identity bitwise exact.
#[inline]
pub fn d4_minus(samples: [f64; 4], dx: f64) -> f64 {
    let [z1, z2, z3, z4] = samples;
    -d4_plus([z4, z3, z2, z1], dx)
}

/// Central 4th-order operator `(z1 - 8 z2 + 8 z3 - z4) / (6 dx)` with samples
/// at offsets (-1, -1/2, +1/2, +1) * dx; the average of the one-sided pair.
#[inline]
pub fn d4_central(samples: [f64; 4], dx: f64) -> f64 {
    let [z1, z2, z3, z4] = samples;
    (z1 - 8.0 * z2 + 8.0 * z3 - z4) / (6.0 * dx)
}

/// Which 3rd-order operator `d3_variant` evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ThirdOrderSide {
    Plus,
    Minus,
    Central,
}

/// 3rd-order operators; `Plus`/`Minus` take 3 samples, `Central` takes 4
/// (see the module table for offsets). Extra samples are ignored.
#[inline]
pub fn d3_variant(side: ThirdOrderSide, samples: &[f64], dx: f64) -> f64 {
    match side {
        ThirdOrderSide::Plus => (samples[0] - 4.0 * samples[1] + 3.0 * samples[2]) / dx,
        ThirdOrderSide::Minus => (-3.0 * samples[0] + 4.0 * samples[1] - samples[2]) / dx,
        ThirdOrderSide::Central => {
            (samples[0] - 4.0 * samples[1] + 4.0 * samples[2] - samples[3]) / (2.0 * dx)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const ALL_STENCILS: [&StencilWeights; 6] = [
        &D4_PLUS,
        &D4_MINUS,
        &D4_CENTRAL,
        &D3_PLUS,
        &D3_MINUS,
        &D3_CENTRAL,
    ];

    #[test]
    fn weights_annihilate_constants() {
        for s in ALL_STENCILS {
            let sum: f64 = s.weights.iter().sum();
            assert_eq!(sum, 0.0, "weights {:?} do not sum to zero", s.weights);
        }
    }

    #[test]
    fn stencil_tables_match_kernels() {
        let dx = 0.37;
        let w = [0.3, -1.2, 0.7, 2.1];
        assert_eq!(D4_PLUS.apply(&w, dx), d4_plus(w, dx));
        // The minus kernel is the negated-reverse plus kernel; the table
        // accumulates in storage order, so agreement is to rounding.
        let (a, b) = (D4_MINUS.apply(&w, dx), d4_minus(w, dx));
        assert!((a - b).abs() <= 1e-15 * a.abs().max(1.0), "{a} vs {b}");
        assert_eq!(D4_CENTRAL.apply(&w, dx), d4_central(w, dx));
        assert_eq!(
            D3_CENTRAL.apply(&w, dx),
            d3_variant(ThirdOrderSide::Central, &w, dx)
        );
        assert_eq!(
            D3_PLUS.apply(&w[..3], dx),
            d3_variant(ThirdOrderSide::Plus, &w[..3], dx)
        );
        assert_eq!(
            D3_MINUS.apply(&w[..3], dx),
            d3_variant(ThirdOrderSide::Minus, &w[..3], dx)
        );
    }

    #[test]
    fn constants_give_zero() {
        // Dyadic constant: every product and partial sum is exact.
        let c = 3.25;
        assert_eq!(d4_plus([c; 4], 0.1), 0.0);
        assert_eq!(d4_minus([c; 4], 0.1), 0.0);
        assert_eq!(d4_central([c; 4], 0.1), 0.0);
        assert_eq!(d3_variant(ThirdOrderSide::Plus, &[c; 3], 0.1), 0.0);
        assert_eq!(d3_variant(ThirdOrderSide::Minus, &[c; 3], 0.1), 0.0);
        assert_eq!(d3_variant(ThirdOrderSide::Central, &[c; 4], 0.1), 0.0);
        // Non-dyadic constants annihilate to rounding error.
        let c = 2.73;
        assert!(d4_plus([c; 4], 0.1).abs() < 1e-13);
        assert!(d4_central([c; 4], 0.1).abs() < 1e-13);
    }

    #[test]
    fn d4_plus_linear_and_cubic() {
        let h = 0.2;
        // z = x at the stencil offsets.
        assert!((d4_plus([-h, -h / 2.0, 0.0, h / 2.0], h) - 1.0).abs() < 1e-14);
        // z = x^3: derivative at 0 is 0.
        let s = [-h * h * h, -h * h * h / 8.0, 0.0, h * h * h / 8.0];
        assert!(d4_plus(s, h).abs() < 1e-14);
    }

    #[test]
    fn d4_minus_linear() {
        let h = 0.2;
        assert!((d4_minus([-h / 2.0, 0.0, h / 2.0, h], h) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn mirror_identity() {
        let dx = 0.7;
        let s = [0.3, -1.2, 0.7, 2.1];
        let rev = [s[3], s[2], s[1], s[0]];
        assert_eq!(d4_minus(s, dx), -d4_plus(rev, dx));
    }

    #[test]
    fn d4_central_linear_and_quartic() {
        let h = 0.3;
        assert!((d4_central([-h, -h / 2.0, h / 2.0, h], h) - 1.0).abs() < 1e-14);
        let h4 = h.powi(4);
        assert_eq!(d4_central([h4, h4 / 16.0, h4 / 16.0, h4], h), 0.0);
    }

    #[test]
    fn d3_examples() {
        let h = 0.4;
        // z = x, plus form at samples (-h, -h/2, 0).
        let v = d3_variant(ThirdOrderSide::Plus, &[-h, -h / 2.0, 0.0], h);
        assert!((v - 1.0).abs() < 1e-14);
        // z = x^2, central form at 0.
        let hh = h * h;
        let v = d3_variant(ThirdOrderSide::Central, &[hh, hh / 4.0, hh / 4.0, hh], h);
        assert_eq!(v, 0.0);
    }

    /// Polynomial exactness at an arbitrary evaluation location: the
    /// 4th-order stencils differentiate degree <= 3 exactly, the 3rd-order
    /// ones degree <= 2.
    #[test]
    fn polynomial_exactness_arbitrary_point() {
        let dx = 0.13;
        let x0 = 0.77; // evaluation point, not a symmetry point
        let poly = |c: &[f64; 4], x: f64| c[0] + c[1] * x + c[2] * x * x + c[3] * x * x * x;
        let dpoly = |c: &[f64; 4], x: f64| c[1] + 2.0 * c[2] * x + 3.0 * c[3] * x * x;
        let cubic = [0.4, -1.3, 2.2, 0.9];
        let quad = [0.4, -1.3, 2.2, 0.0];

        let gather = |offsets: &[f64], c: &[f64; 4]| {
            offsets
                .iter()
                .map(|o| poly(c, x0 + o * dx))
                .collect::<Vec<_>>()
        };

        for (s, order) in [
            (&D4_PLUS, 3),
            (&D4_MINUS, 3),
            (&D4_CENTRAL, 3),
            (&D3_PLUS, 2),
            (&D3_MINUS, 2),
            (&D3_CENTRAL, 2),
        ] {
            let c = if order == 3 { &cubic } else { &quad };
            let samples = gather(s.offsets, c);
            let got = s.apply(&samples, dx);
            let want = dpoly(c, x0);
            assert!(
                (got - want).abs() <= 1e-12 * want.abs().max(1.0),
                "stencil {:?}: got {got}, want {want}",
                s.weights
            );
        }
    }

    /// Central = average of the one-sided pair on a shared 5-sample window
    /// (offsets -1, -1/2, 0, +1/2, +1). The middle sample cancels
    /// algebraically; floating-point association leaves rounding residue.
    #[test]
    fn central_is_mean_of_one_sided() {
        let dx = 0.9;
        let z = [1.3, -0.2, 4.1, 0.05, -2.7];
        let plus = d4_plus([z[0], z[1], z[2], z[3]], dx);
        let minus = d4_minus([z[1], z[2], z[3], z[4]], dx);
        let central = d4_central([z[0], z[1], z[3], z[4]], dx);
        let mean = (plus + minus) / 2.0;
        assert!(
            (central - mean).abs() <= 1e-14 * central.abs().max(1.0),
            "{central} vs {mean}"
        );
    }
}
