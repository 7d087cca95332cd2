use std::ops::RangeInclusive;

use num_complex::Complex64;

use crate::error::{dim_err, Error, Result};

/// Points with `||z| − 1| ≤ CIRCLE_TOL` are treated as lying on `𝕋`.
pub const CIRCLE_TOL: f64 = 1e-12;

const ZERO: Complex64 = Complex64 { re: 0.0, im: 0.0 };

/// `e^{iθ}`.
pub fn circle_point(theta: f64) -> Complex64 {
    Complex64::from_polar(1.0, theta)
}

/// Finitely supported Fourier series with values in `ℂᵐ`.
#[derive(Debug, Clone, PartialEq)]
pub struct VecTrigPoly {
    valdim: usize,
    kmin: i64,
    len: usize,
    /// `len` blocks of `valdim` entries, frequency-major.
    coeffs: Vec<Complex64>,
}

impl VecTrigPoly {
    /// Coefficient vectors for `k = kmin, kmin+1, …`.
    pub fn new(valdim: usize, kmin: i64, coeffs: Vec<Vec<Complex64>>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Invalid(
                "a series needs at least one coefficient".into(),
            ));
        }
        if let Some(bad) = coeffs.iter().find(|c| c.len() != valdim) {
            return Err(dim_err(format!(
                "coefficient of length {} in a series of valdim {valdim}",
                bad.len()
            )));
        }
        let len = coeffs.len();
        Self::from_flat(valdim, kmin, len, coeffs.concat())
    }

    pub fn from_flat(valdim: usize, kmin: i64, len: usize, coeffs: Vec<Complex64>) -> Result<Self> {
        if len == 0 {
            return Err(Error::Invalid(
                "a series needs at least one coefficient".into(),
            ));
        }
        if coeffs.len() != valdim * len {
            return Err(dim_err(format!(
                "{} entries for {len} coefficients of valdim {valdim}",
                coeffs.len()
            )));
        }
        if coeffs.iter().any(|z| !z.is_finite()) {
            return Err(Error::Invalid("series coefficients must be finite".into()));
        }
        Ok(Self {
            valdim,
            kmin,
            len,
            coeffs,
        })
    }

    /// Builds the series on `kmin..=kmax` from `entry(k, i)`.
    pub fn from_fn(
        valdim: usize,
        range: RangeInclusive<i64>,
        mut entry: impl FnMut(i64, usize) -> Complex64,
    ) -> Result<Self> {
        let (lo, hi) = (*range.start(), *range.end());
        if hi < lo {
            return Err(Error::Invalid(format!("empty frequency range {lo}..={hi}")));
        }
        let len = (hi - lo + 1) as usize;
        let mut coeffs = Vec::with_capacity(len * valdim);
        for k in lo..=hi {
            for i in 0..valdim {
                coeffs.push(entry(k, i));
            }
        }
        Self::from_flat(valdim, lo, len, coeffs)
    }

    /// Series given componentwise: `components[i][n]` is the coefficient of
    /// `z^{kmin+n}` in component `i`. Shorter components are zero-padded.
    pub fn from_components(kmin: i64, components: &[Vec<Complex64>]) -> Result<Self> {
        let len = components.iter().map(Vec::len).max().unwrap_or(0).max(1);
        Self::from_fn(components.len(), kmin..=kmin + len as i64 - 1, |k, i| {
            components[i]
                .get((k - kmin) as usize)
                .copied()
                .unwrap_or(ZERO)
        })
    }

    pub fn zero(valdim: usize) -> Self {
        Self {
            valdim,
            kmin: 0,
            len: 1,
            coeffs: vec![ZERO; valdim],
        }
    }

    pub fn constant(value: Vec<Complex64>) -> Result<Self> {
        Self::monomial(0, value)
    }

    /// `z^k · value`.
    pub fn monomial(k: i64, value: Vec<Complex64>) -> Result<Self> {
        let valdim = value.len();
        Self::from_flat(valdim, k, 1, value)
    }

    pub fn valdim(&self) -> usize {
        self.valdim
    }

    pub fn kmin(&self) -> i64 {
        self.kmin
    }

    pub fn kmax(&self) -> i64 {
        self.kmin + self.len as i64 - 1
    }

    /// Number of stored frequencies, `kmax − kmin + 1`.
    pub fn bandwidth(&self) -> usize {
        self.len
    }

    pub fn frequencies(&self) -> RangeInclusive<i64> {
        self.kmin..=self.kmax()
    }

    pub fn flat_coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    /// Stored coefficient at frequency `k`, if `k` is in range.
    pub fn coeff(&self, k: i64) -> Option<&[Complex64]> {
        if k < self.kmin || k > self.kmax() {
            return None;
        }
        let n = (k - self.kmin) as usize;
        Some(&self.coeffs[n * self.valdim..(n + 1) * self.valdim])
    }

    pub fn coeff_or_zero(&self, k: i64) -> Vec<Complex64> {
        self.coeff(k)
            .map(<[Complex64]>::to_vec)
            .unwrap_or_else(|| vec![ZERO; self.valdim])
    }

    fn coeff_mut(&mut self, k: i64) -> &mut [Complex64] {
        let n = (k - self.kmin) as usize;
        &mut self.coeffs[n * self.valdim..(n + 1) * self.valdim]
    }

    /// Iterator over `(k, c_k)`.
    pub fn iter(&self) -> impl Iterator<Item = (i64, &[Complex64])> + '_ {
        (0..self.len).map(move |n| {
            (
                self.kmin + n as i64,
                &self.coeffs[n * self.valdim..(n + 1) * self.valdim],
            )
        })
    }

    /// True iff every coefficient at a negative frequency is zero, i.e. the
    /// series lies in `H²`.
    pub fn is_analytic(&self) -> bool {
        self.iter()
            .filter(|(k, _)| *k < 0)
            .all(|(_, c)| c.iter().all(|z| *z == ZERO))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|z| *z == ZERO)
    }

    /// Drops exactly-zero coefficients at both ends; the zero series becomes a
    /// single zero coefficient at frequency 0.
    pub fn trimmed(&self) -> Self {
        let nonzero: Vec<i64> = self
            .iter()
            .filter(|(_, c)| c.iter().any(|z| *z != ZERO))
            .map(|(k, _)| k)
            .collect();
        match (nonzero.first(), nonzero.last()) {
            (Some(&lo), Some(&hi)) => self.restricted(lo, hi),
            _ => Self::zero(self.valdim),
        }
    }

    /// The same function stored on `lo..=hi`; coefficients outside are dropped.
    fn restricted(&self, lo: i64, hi: i64) -> Self {
        let len = (hi - lo + 1) as usize;
        let mut coeffs = Vec::with_capacity(len * self.valdim);
        for k in lo..=hi {
            coeffs.extend(self.coeff_or_zero(k));
        }
        Self {
            valdim: self.valdim,
            kmin: lo,
            len,
            coeffs,
        }
    }

    /// Keeps only frequencies in `lo..=hi` (and stores exactly that range).
    pub fn truncate(&self, lo: i64, hi: i64) -> Result<Self> {
        if hi < lo {
            return Err(Error::Invalid(format!("empty frequency range {lo}..={hi}")));
        }
        Ok(self.restricted(lo, hi))
    }

    /// The same function stored on a range containing both its own support and
    /// `lo..=hi`.
    pub fn widened(&self, lo: i64, hi: i64) -> Self {
        self.restricted(lo.min(self.kmin), hi.max(self.kmax()))
    }

    fn check_valdim(&self, other: &Self) -> Result<()> {
        if self.valdim != other.valdim {
            return Err(dim_err(format!(
                "series of valdim {} and {}",
                self.valdim, other.valdim
            )));
        }
        Ok(())
    }

    fn zip_with(
        &self,
        other: &Self,
        op: impl Fn(Complex64, Complex64) -> Complex64,
    ) -> Result<Self> {
        self.check_valdim(other)?;
        let lo = self.kmin.min(other.kmin);
        let hi = self.kmax().max(other.kmax());
        Self::from_fn(self.valdim, lo..=hi, |k, i| {
            let a = self.coeff(k).map_or(ZERO, |c| c[i]);
            let b = other.coeff(k).map_or(ZERO, |c| c[i]);
            op(a, b)
        })
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|z| z * s).collect(),
            ..self.clone()
        }
    }

    /// Largest coefficient-entry difference over the union of supports.
    pub fn max_abs_diff(&self, other: &Self) -> Result<f64> {
        Ok(self
            .sub(other)?
            .coeffs
            .iter()
            .map(|z| z.norm())
            .fold(0.0, f64::max))
    }

    /// Multiplication by `z^shift`.
    pub fn shifted(&self, shift: i64) -> Self {
        Self {
            kmin: self.kmin + shift,
            ..self.clone()
        }
    }

    /// `f(z) = Σ c_k z^k`.
    ///
    /// On `𝕋` any support is allowed and `z^{−n} = z̄ⁿ`. Inside the disc the
    /// series must be analytic.
    pub fn eval(&self, z: Complex64) -> Result<Vec<Complex64>> {
        let r = z.norm();
        let on_circle = (r - 1.0).abs() <= CIRCLE_TOL;
        if !on_circle {
            if r > 1.0 {
                return Err(Error::Domain(format!(
                    "|z| = {r} lies outside the closed disc"
                )));
            }
            if !self.is_analytic() {
                return Err(Error::Domain(
                    "series with negative frequencies evaluated inside the disc".into(),
                ));
            }
        }
        let mut out = vec![ZERO; self.valdim];
        for (k, c) in self.iter() {
            // analytic off the circle, so negative k only arrives with zero coefficients
            let zk = if k >= 0 {
                z.powi(k as i32)
            } else if on_circle {
                z.conj().powi((-k) as i32)
            } else {
                continue;
            };
            for (o, ci) in out.iter_mut().zip(c) {
                *o += ci * zk;
            }
        }
        Ok(out)
    }

    /// `(1/2π)∫⟨f, g⟩ dθ = Σ_k ⟨c_k(f), c_k(g)⟩`.
    pub fn l2_inner(&self, other: &Self) -> Result<Complex64> {
        self.check_valdim(other)?;
        Ok(self
            .iter()
            .filter_map(|(k, c)| other.coeff(k).map(|d| crate::inner(c, d)))
            .sum())
    }

    pub fn l2_norm(&self) -> f64 {
        crate::norm(&self.coeffs)
    }

    /// Riesz projection `P₊`: drops every negative frequency.
    pub fn riesz_project(&self) -> Self {
        if self.kmin >= 0 {
            return self.clone();
        }
        if self.kmax() < 0 {
            return Self::zero(self.valdim);
        }
        self.restricted(0, self.kmax())
    }

    /// Scalar series of `z ↦ ⟨f(z), g(z)⟩` on `𝕋`, whose coefficient at `k` is
    /// `Σ_{j−l=k} ⟨c_j(f), c_l(g)⟩`.
    ///
    /// Inside the disc this series does not represent `⟨f(z), g(z)⟩`, since
    /// there `z̄ ≠ 1/z`.
    pub fn pointwise_inner(&self, other: &Self) -> Result<Self> {
        self.check_valdim(other)?;
        let lo = self.kmin - other.kmax();
        let hi = self.kmax() - other.kmin;
        let mut out = Self::from_fn(1, lo..=hi, |_, _| ZERO)?;
        for (j, c) in self.iter() {
            for (l, d) in other.iter() {
                out.coeff_mut(j - l)[0] += crate::inner(c, d);
            }
        }
        Ok(out)
    }

    /// `s·f` for a scalar series `s` (valdim 1).
    pub fn scalar_mul(&self, scalar: &Self) -> Result<Self> {
        if scalar.valdim != 1 {
            return Err(dim_err(format!("multiplier has valdim {}", scalar.valdim)));
        }
        let lo = self.kmin + scalar.kmin;
        let hi = self.kmax() + scalar.kmax();
        let mut out = Self::from_fn(self.valdim, lo..=hi, |_, _| ZERO)?;
        for (j, s) in scalar.iter() {
            for (k, c) in self.iter() {
                for (o, ci) in out.coeff_mut(j + k).iter_mut().zip(c) {
                    *o += s[0] * ci;
                }
            }
        }
        Ok(out)
    }

    /// Complex derivative of an analytic series: coefficient `k` becomes
    /// `(k+1)·c_{k+1}`.
    pub fn derivative(&self) -> Result<Self> {
        if !self.is_analytic() {
            return Err(Error::Domain(
                "derivative of a series with negative frequencies".into(),
            ));
        }
        let hi = self.kmax() - 1;
        if hi < 0 {
            return Ok(Self::zero(self.valdim));
        }
        let lo = (self.kmin - 1).max(0);
        Self::from_fn(self.valdim, lo..=hi, |k, i| {
            self.coeff(k + 1).map_or(ZERO, |c| c[i] * (k + 1) as f64)
        })
    }
}
