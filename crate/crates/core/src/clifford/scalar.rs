use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

/// Exact Gaussian dyadic rational `(re + i·im) / 2^shift`.
///
/// Kept normalized: `shift` is zero or at least one of `re`, `im` is odd.
/// Arithmetic panics on `i64` overflow, which does not occur at the sizes
/// this crate handles (shifts stay below 64 and numerators below 2^shift).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaussDyadic {
    re: i64,
    im: i64,
    shift: u32,
}

impl GaussDyadic {
    pub const ZERO: Self = Self {
        re: 0,
        im: 0,
        shift: 0,
    };
    pub const ONE: Self = Self {
        re: 1,
        im: 0,
        shift: 0,
    };
    pub const I: Self = Self {
        re: 0,
        im: 1,
        shift: 0,
    };

    pub fn new(re: i64, im: i64, shift: u32) -> Self {
        Self { re, im, shift }.normalized()
    }

    pub fn from_int(v: i64) -> Self {
        Self::new(v, 0, 0)
    }

    /// `i^k`.
    pub fn i_pow(k: u8) -> Self {
        match k % 4 {
            0 => Self::new(1, 0, 0),
            1 => Self::new(0, 1, 0),
            2 => Self::new(-1, 0, 0),
            _ => Self::new(0, -1, 0),
        }
    }

    /// `2^{-k}`.
    pub fn inv_pow2(k: u32) -> Self {
        Self::new(1, 0, k)
    }

    pub fn re_num(&self) -> i64 {
        self.re
    }

    pub fn im_num(&self) -> i64 {
        self.im
    }

    pub fn shift(&self) -> u32 {
        self.shift
    }

    pub fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im, self.shift)
    }

    /// `self · 2^k`.
    pub fn mul_pow2(self, k: u32) -> Self {
        if k >= self.shift {
            let up = k - self.shift;
            Self::new(shl_exact(self.re, up), shl_exact(self.im, up), 0)
        } else {
            Self::new(self.re, self.im, self.shift - k)
        }
    }

    /// `Some(k)` when the value is exactly `i^k`.
    pub fn as_unit(&self) -> Option<u8> {
        if self.shift != 0 {
            return None;
        }
        match (self.re, self.im) {
            (1, 0) => Some(0),
            (0, 1) => Some(1),
            (-1, 0) => Some(2),
            (0, -1) => Some(3),
            _ => None,
        }
    }

    /// Multiplicative inverse, when it is again a Gaussian dyadic rational.
    pub fn checked_inv(self) -> Option<Self> {
        let norm = self
            .re
            .checked_mul(self.re)?
            .checked_add(self.im.checked_mul(self.im)?)?;
        if norm == 0 || !(norm as u64).is_power_of_two() {
            return None;
        }
        let t = norm.trailing_zeros();
        Some(Self::new(self.re, -self.im, t).mul_pow2(self.shift))
    }

    pub fn to_complex(self) -> Complex64 {
        let scale = (0.5f64).powi(self.shift as i32);
        Complex64::new(self.re as f64 * scale, self.im as f64 * scale)
    }

    fn normalized(mut self) -> Self {
        if self.re == 0 && self.im == 0 {
            return Self::ZERO;
        }
        while self.shift > 0 && self.re % 2 == 0 && self.im % 2 == 0 {
            self.re /= 2;
            self.im /= 2;
            self.shift -= 1;
        }
        self
    }

    fn aligned(self, shift: u32) -> (i64, i64) {
        let up = shift - self.shift;
        (shl_exact(self.re, up), shl_exact(self.im, up))
    }
}

fn shl_exact(v: i64, by: u32) -> i64 {
    v.checked_shl(by)
        .filter(|s| s >> by == v)
        .expect("coefficient overflow")
}

impl Add for GaussDyadic {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let shift = self.shift.max(rhs.shift);
        let (a, b) = self.aligned(shift);
        let (c, d) = rhs.aligned(shift);
        Self::new(
            a.checked_add(c).expect("coefficient overflow"),
            b.checked_add(d).expect("coefficient overflow"),
            shift,
        )
    }
}

impl Neg for GaussDyadic {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im, self.shift)
    }
}

impl Sub for GaussDyadic {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for GaussDyadic {
    type Output = Self;
    // denominators 2^a · 2^b combine by adding shifts
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn mul(self, rhs: Self) -> Self {
        let m = |a: i64, b: i64| a.checked_mul(b).expect("coefficient overflow");
        let re = m(self.re, rhs.re)
            .checked_sub(m(self.im, rhs.im))
            .expect("coefficient overflow");
        let im = m(self.re, rhs.im)
            .checked_add(m(self.im, rhs.re))
            .expect("coefficient overflow");
        Self::new(re, im, self.shift + rhs.shift)
    }
}

impl fmt::Debug for GaussDyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{:+}i)/2^{}", self.re, self.im, self.shift)
    }
}

impl fmt::Display for GaussDyadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = match (self.re, self.im) {
            (re, 0) => re.to_string(),
            (0, im) => format!("{im}i"),
            (re, im) => format!("({re}{im:+}i)"),
        };
        match self.shift {
            0 => f.write_str(&num),
            s => write!(f, "{num}/2^{s}"),
        }
    }
}
