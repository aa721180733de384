use num_traits::{One, Zero};

use super::exact::ExactRational;
use super::poly::Polynomial;
use crate::error::{domain, Result};

/// Exact piecewise polynomial with rational breakpoints.
///
/// Piece `i` is valid on the half-open interval `[b_i, b_{i+1})`; the function
/// is zero outside `[b_0, b_n)`. The zero function has no breakpoints.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PiecewisePolynomial {
    breakpoints: Vec<ExactRational>,
    pieces: Vec<Polynomial>,
}

impl PiecewisePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn new(breakpoints: Vec<ExactRational>, pieces: Vec<Polynomial>) -> Result<Self> {
        if breakpoints.is_empty() && pieces.is_empty() {
            return Ok(Self::zero());
        }
        if breakpoints.len() != pieces.len() + 1 {
            return domain(format!(
                "{} breakpoints cannot carry {} pieces",
                breakpoints.len(),
                pieces.len()
            ));
        }
        if breakpoints.windows(2).any(|w| w[0] >= w[1]) {
            return domain("breakpoints must be strictly increasing");
        }
        Ok(Self {
            breakpoints,
            pieces,
        })
    }

    /// `c` on `[lo, hi)`, zero elsewhere.
    pub fn indicator(lo: ExactRational, hi: ExactRational, c: ExactRational) -> Result<Self> {
        Self::new(vec![lo, hi], vec![Polynomial::constant(c)])
    }

    pub fn breakpoints(&self) -> &[ExactRational] {
        &self.breakpoints
    }

    pub fn pieces(&self) -> &[Polynomial] {
        &self.pieces
    }

    pub fn is_zero(&self) -> bool {
        self.pieces.iter().all(Polynomial::is_zero)
    }

    /// Closed support interval `[b_0, b_n]`, `None` for the zero function.
    pub fn support(&self) -> Option<(&ExactRational, &ExactRational)> {
        Some((self.breakpoints.first()?, self.breakpoints.last()?))
    }

    /// Right-continuous point value.
    pub fn eval(&self, x: &ExactRational) -> ExactRational {
        let count = self.breakpoints.partition_point(|b| b <= x);
        self.piece_value(count, x)
    }

    /// Left limit at `x`.
    pub fn eval_left(&self, x: &ExactRational) -> ExactRational {
        let count = self.breakpoints.partition_point(|b| b < x);
        self.piece_value(count, x)
    }

    fn piece_value(&self, count: usize, x: &ExactRational) -> ExactRational {
        match count.checked_sub(1).and_then(|i| self.pieces.get(i)) {
            Some(p) => p.eval(x),
            None => ExactRational::zero(),
        }
    }

    pub fn derivative(&self) -> Self {
        Self {
            breakpoints: self.breakpoints.clone(),
            pieces: self.pieces.iter().map(Polynomial::derivative).collect(),
        }
    }

    /// Exact integral over the whole support.
    pub fn integral(&self) -> ExactRational {
        self.pieces
            .iter()
            .zip(self.breakpoints.windows(2))
            .map(|(p, w)| {
                let a = p.antiderivative();
                a.eval(&w[1]) - a.eval(&w[0])
            })
            .sum()
    }

    /// Convolution with the unit box on `[0, 1)`:
    /// `(B_1 * f)(x) = F(x) - F(x - 1)` with `F` the running integral of `f`.
    pub fn convolve_unit_box(&self) -> Self {
        if self.pieces.is_empty() {
            return Self::zero();
        }
        // Running antiderivative, one polynomial per piece, continuous at knots.
        let mut running = Vec::with_capacity(self.pieces.len());
        let mut acc = ExactRational::zero();
        for (p, w) in self.pieces.iter().zip(self.breakpoints.windows(2)) {
            let a = p.antiderivative();
            let offset = &acc - a.eval(&w[0]);
            let piece = &a + &Polynomial::constant(offset);
            acc = piece.eval(&w[1]);
            running.push(piece);
        }
        let total = Polynomial::constant(acc);
        let region = |x: &ExactRational| -> Polynomial {
            let count = self.breakpoints.partition_point(|b| b <= x);
            if count == 0 {
                Polynomial::zero()
            } else if count > running.len() {
                total.clone()
            } else {
                running[count - 1].clone()
            }
        };

        let one = ExactRational::one();
        let mut knots: Vec<ExactRational> = self
            .breakpoints
            .iter()
            .flat_map(|b| [b.clone(), b + &one])
            .collect();
        knots.sort();
        knots.dedup();

        let minus_one = -one.clone();
        let pieces = knots
            .windows(2)
            .map(|w| {
                let lead = region(&w[0]);
                let lag = region(&(&w[0] - &one)).compose_shift(&minus_one);
                &lead - &lag
            })
            .collect();
        Self {
            breakpoints: knots,
            pieces,
        }
    }
}
