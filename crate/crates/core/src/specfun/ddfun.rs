//! Double-double versions of log Γ, digamma, ζ and β used by the extended
//! precision filter evaluations.

use std::sync::OnceLock;

use crate::dd::{Dd, DdComplex};

use super::BERNOULLI;

fn bernoulli_dd(k: usize) -> Dd {
    static TABLE: OnceLock<Vec<Dd>> = OnceLock::new();
    TABLE.get_or_init(|| BERNOULLI.iter().map(|&(n, d)| Dd::ratio(n, d)).collect())[k - 1]
}

fn half_ln_2pi() -> Dd {
    static V: OnceLock<Dd> = OnceLock::new();
    *V.get_or_init(|| Dd::TWO_PI.ln().mul_pow2(-1))
}

/// log Γ(z) in double-double, same branch as the double version.
pub fn dd_ln_gamma(z: DdComplex) -> DdComplex {
    let mut z = z;
    let mut shift = DdComplex::ZERO;
    while z.re.hi < 5.0 || z.to_c64().norm() < 30.0 {
        shift += z.ln();
        z = z + 1.0;
    }
    let lz = z.ln();
    let mut acc = (z - 0.5) * lz - z + DdComplex::real(half_ln_2pi());
    let zi = z.recip();
    let zi2 = zi * zi;
    let mut p = zi;
    for k in 1..=20 {
        let c = bernoulli_dd(k) / Dd::from_f64(((2 * k) * (2 * k - 1)) as f64);
        let term = p.scale(c);
        acc += term;
        if term.norm() < 1e-36 * acc.norm().max(1.0) {
            break;
        }
        p *= zi2;
    }
    acc - shift
}

pub fn dd_gamma(z: DdComplex) -> DdComplex {
    dd_ln_gamma(z).exp()
}

/// Digamma in double-double.
pub fn dd_digamma(z: DdComplex) -> DdComplex {
    let mut z = z;
    let mut acc = DdComplex::ZERO;
    while z.re.hi < 5.0 || z.to_c64().norm() < 30.0 {
        acc -= z.recip();
        z = z + 1.0;
    }
    let zi = z.recip();
    let zi2 = zi * zi;
    let mut series = DdComplex::ZERO;
    let mut p = zi2;
    for k in 1..=20 {
        let term = p.scale(bernoulli_dd(k) / Dd::from_f64((2 * k) as f64));
        series += term;
        if term.norm() < 1e-36 {
            break;
        }
        p *= zi2;
    }
    acc + z.ln() - zi.scale(Dd::from_f64(0.5)) - series
}

/// ln(m + q) for m < limit, cached per shift.
fn ln_table(q_quarters: usize, len: usize) -> &'static [Dd] {
    static TABLES: [OnceLock<Vec<Dd>>; 5] =
        [OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new(), OnceLock::new()];
    const CAP: usize = 4096;
    assert!(len <= CAP, "double-double summation length {len} exceeds cache");
    let t = TABLES[q_quarters].get_or_init(|| {
        let q = Dd::from_f64(q_quarters as f64 / 4.0);
        (0..CAP)
            .map(|m| {
                let x = Dd::from_f64(m as f64) + q;
                if x.hi == 0.0 {
                    Dd::ZERO
                } else {
                    x.ln()
                }
            })
            .collect()
    });
    &t[..len]
}

fn em_shifted_dd(s: DdComplex, shifts: &[(usize, f64)], n: usize) -> DdComplex {
    let mut acc = DdComplex::ZERO;
    for &(q4, c) in shifts {
        let logs = ln_table(q4, n + 1);
        let mut part = DdComplex::ZERO;
        for &l in &logs[..n] {
            part += (-s).scale(l).exp();
        }
        acc += part * c;
    }
    let one = DdComplex::ONE;
    let u = one - s;
    let nf = Dd::from_f64(n as f64);
    let qd = |q4: usize| nf + Dd::from_f64(q4 as f64 / 4.0);
    let tail = if shifts.len() == 2 && shifts[0].1 == 1.0 && shifts[1].1 == -1.0 {
        let (qa, qb) = (qd(shifts[0].0), qd(shifts[1].0));
        let l = (qa / qb).ln();
        let z = u.scale(l);
        let phi = if z.norm() < 1e-8 {
            one + z * 0.5 + z * z / 6.0 + z * z * z / 24.0
        } else {
            (z.exp() - 1.0) / z
        };
        -(u.scale(qb.ln()).exp() * phi).scale(l)
    } else {
        let mut t = DdComplex::ZERO;
        for &(q4, c) in shifts {
            t += u.scale(qd(q4).ln()).exp() * c;
        }
        t / (s - 1.0)
    };
    acc += tail;
    let lns: Vec<(Dd, f64)> = shifts.iter().map(|&(q4, c)| (qd(q4).ln(), c)).collect();
    let mut edge = DdComplex::ZERO;
    for &(l, c) in &lns {
        edge += (-s).scale(l).exp() * c;
    }
    acc += edge * 0.5;
    let mut poch = s;
    let mut fact = Dd::from_f64(2.0);
    for k in 1..=20 {
        let mut pw = DdComplex::ZERO;
        for &(l, c) in &lns {
            pw += (-(s + (2 * k - 1) as f64)).scale(l).exp() * c;
        }
        let term = (poch * pw).scale(bernoulli_dd(k) / fact);
        acc += term;
        if term.norm() < 1e-34 * acc.norm() {
            break;
        }
        poch = poch * (s + (2 * k - 1) as f64) * (s + (2 * k) as f64);
        fact *= Dd::from_f64(((2 * k + 1) * (2 * k + 2)) as f64);
    }
    acc
}

fn dd_cutoff(s: DdComplex) -> usize {
    let c = s.to_c64();
    (c.im.abs().max(20.0) + 2.0 * (-c.re).max(0.0)).ceil() as usize + 10
}

/// ζ(s) in double-double; caller keeps s away from 1.
pub fn dd_zeta(s: DdComplex) -> DdComplex {
    em_shifted_dd(s, &[(4, 1.0)], dd_cutoff(s))
}

/// β(s) in double-double.
pub fn dd_beta(s: DdComplex) -> DdComplex {
    let four = (-s).scale(Dd::LN2.mul_pow2(1)).exp();
    four * em_shifted_dd(s, &[(1, 1.0), (3, -1.0)], dd_cutoff(s))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn dc(re: f64, im: f64) -> DdComplex {
        DdComplex::from_c64(Complex64::new(re, im))
    }

    #[test]
    fn dd_gamma_half_is_sqrt_pi() {
        let g = dd_gamma(dc(0.5, 0.0));
        assert!((g.re - Dd::PI.sqrt()).to_f64().abs() < 1e-30);
        assert!(g.im.to_f64().abs() < 1e-30);
    }

    #[test]
    fn dd_gamma_against_oracle() {
        let g = dd_gamma(dc(0.25, 3.5));
        let want = Complex64::new(0.006_609_577_111_117_995_578_1, 0.003_567_616_377_284_916_725_1);
        assert!((g.to_c64() - want).norm() / want.norm() < 1e-16);
    }

    #[test]
    fn dd_zeta_two() {
        let z = dd_zeta(dc(2.0, 0.0));
        let pi2_6 = Dd::PI * Dd::PI / 6.0;
        assert!((z.re - pi2_6).to_f64().abs() < 1e-30);
    }

    #[test]
    fn dd_beta_two_is_catalan() {
        // Catalan = 0.915965594177219015054603514932384110774…
        let b = dd_beta(dc(2.0, 0.0));
        let want = Dd::new(0.915_965_594_177_219, 3.747_558_421_514_984e-18);
        assert!((b.re - want).to_f64().abs() < 1e-30, "{}", b.re);
        let three = dd_beta(dc(3.0, 0.0));
        let pi3_32 = Dd::PI * Dd::PI * Dd::PI / 32.0;
        assert!((three.re - pi3_32).to_f64().abs() < 1e-30);
    }

    #[test]
    fn dd_digamma_one() {
        // Euler–Mascheroni constant
        let e = dd_digamma(dc(1.0, 0.0));
        let gamma = Dd::new(0.577_215_664_901_532_9, -4.942_915_152_430_645e-18);
        assert!((e.re + gamma).to_f64().abs() < 1e-30);
    }
}
