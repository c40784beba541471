//! Compensated and pairwise summation.
//!
//! Every reduction in the crate goes through these helpers so results do not
//! depend on how work was split across threads.

use num_complex::Complex64;

/// Neumaier's variant of Kahan summation.
#[derive(Clone, Copy, Debug, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// Componentwise Neumaier accumulator for complex values.
#[derive(Clone, Copy, Debug, Default)]
pub struct ComplexNeumaier {
    re: Neumaier,
    im: Neumaier,
}

impl ComplexNeumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    #[inline]
    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.value(), self.im.value())
    }
}

pub fn neumaier_sum<I: IntoIterator<Item = f64>>(it: I) -> f64 {
    let mut acc = Neumaier::new();
    for x in it {
        acc.add(x);
    }
    acc.value()
}

pub fn complex_sum<I: IntoIterator<Item = Complex64>>(it: I) -> Complex64 {
    let mut acc = ComplexNeumaier::new();
    for z in it {
        acc.add(z);
    }
    acc.value()
}

/// Pairwise (cascade) summation over a fixed-order slice.
pub fn pairwise_sum(xs: &[Complex64]) -> Complex64 {
    const BLOCK: usize = 16;
    if xs.len() <= BLOCK {
        return complex_sum(xs.iter().copied());
    }
    let mid = xs.len() / 2;
    pairwise_sum(&xs[..mid]) + pairwise_sum(&xs[mid..])
}

pub fn pairwise_sum_real(xs: &[f64]) -> f64 {
    const BLOCK: usize = 16;
    if xs.len() <= BLOCK {
        return neumaier_sum(xs.iter().copied());
    }
    let mid = xs.len() / 2;
    pairwise_sum_real(&xs[..mid]) + pairwise_sum_real(&xs[mid..])
}
