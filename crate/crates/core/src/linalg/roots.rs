//! Real roots of monic quadratics and cubics known to have only real roots.

use std::f64::consts::PI;

use super::LinalgError;

/// Normalised discriminant slack before roots are declared complex.
const BORDERLINE: f64 = 1e-9;

/// Roots of `t² + b·t + c`, ascending.
pub fn real_roots_quadratic(b: f64, c: f64) -> Result<[f64; 2], LinalgError> {
    let scale = 1.0 + b * b + c.abs();
    let mut disc = b * b - 4.0 * c;
    if disc < 0.0 {
        if disc < -BORDERLINE * scale {
            return Err(LinalgError::ComplexRootsDetected { discriminant: disc });
        }
        disc = 0.0;
    }
    // q = −(b + sign(b)√disc)/2 avoids cancellation; the other root is c/q.
    let sq = disc.sqrt();
    let q = -0.5 * (b + if b >= 0.0 { sq } else { -sq });
    let (r1, r2) = if q == 0.0 { (0.0, 0.0) } else { (q, c / q) };
    Ok(if r1 <= r2 { [r1, r2] } else { [r2, r1] })
}

/// Roots of `t³ + a₂t² + a₁t + a₀`, ascending.
///
/// Uses the trigonometric form for three real roots. Near a repeated root,
/// where the trigonometric argument drifts just outside `[−1, 1]`, it falls
/// back to one Cardano root plus the deflated quadratic.
pub fn real_roots_cubic(a2: f64, a1: f64, a0: f64) -> Result<[f64; 3], LinalgError> {
    let shift = a2 / 3.0;
    let p = a1 - a2 * a2 / 3.0;
    let q = 2.0 * a2 * a2 * a2 / 27.0 - a2 * a1 / 3.0 + a0;
    // Work with y = x / s so that P and Q are O(1).
    let s = 1f64.max(a2.abs()).max(a1.abs().sqrt()).max(a0.abs().cbrt());
    let (pn, qn) = (p / (s * s), q / (s * s * s));
    let d = qn * qn / 4.0 + pn * pn * pn / 27.0;
    if d > BORDERLINE {
        return Err(LinalgError::ComplexRootsDetected { discriminant: -108.0 * d });
    }

    let mut ys = [0.0f64; 3];
    let trig = if pn < 0.0 {
        let m = 2.0 * (-pn / 3.0).sqrt();
        let arg = 3.0 * qn / (pn * m);
        (arg.abs() <= 1.0).then_some((m, arg))
    } else {
        None
    };
    match trig {
        Some((m, arg)) => {
            let phi = arg.acos() / 3.0;
            for (k, y) in ys.iter_mut().enumerate() {
                *y = m * (phi - 2.0 * PI * k as f64 / 3.0).cos();
            }
        }
        None => {
            let sd = d.max(0.0).sqrt();
            let y1 = (-qn / 2.0 + sd).cbrt() + (-qn / 2.0 - sd).cbrt();
            // y³ + Py + Q = (y − y₁)(y² + y₁y + y₁² + P)
            let [y2, y3] = real_roots_quadratic(y1, y1 * y1 + pn)
                .unwrap_or([-y1 / 2.0, -y1 / 2.0]);
            ys = [y1, y2, y3];
        }
    }

    let cubic = |t: f64| ((t + a2) * t + a1) * t + a0;
    let dcubic = |t: f64| (3.0 * t + 2.0 * a2) * t + a1;
    let mut roots = ys.map(|y| y * s - shift);
    for r in roots.iter_mut() {
        for _ in 0..3 {
            let (f, df) = (cubic(*r), dcubic(*r));
            if df == 0.0 {
                break;
            }
            let next = *r - f / df;
            if cubic(next).abs() < f.abs() {
                *r = next;
            } else {
                break;
            }
        }
    }
    roots.sort_by(f64::total_cmp);
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: f64, b: f64) -> bool {
        (a - b).abs() < 1e-12
    }

    #[test]
    fn quadratic_examples() {
        assert_eq!(real_roots_quadratic(0.0, -1.0).unwrap(), [-1.0, 1.0]);
        assert_eq!(real_roots_quadratic(0.0, 0.0).unwrap(), [0.0, 0.0]);
        let [a, b] = real_roots_quadratic(-2.0, 1.0).unwrap();
        assert!(close(a, 1.0) && close(b, 1.0));
        assert!(matches!(
            real_roots_quadratic(0.0, 1.0),
            Err(LinalgError::ComplexRootsDetected { .. })
        ));
    }

    #[test]
    fn quadratic_from_c4_minus_corona() {
        // t² − (√2+1)t + (√2 − 4), roots (√2+1 ± √(19−2√2))/2
        let r2 = 2f64.sqrt();
        let [lo, hi] = real_roots_quadratic(-(r2 + 1.0), r2 - 4.0).unwrap();
        let disc = (19.0 - 2.0 * r2).sqrt();
        assert!(close(lo, (r2 + 1.0 - disc) / 2.0));
        assert!(close(hi, (r2 + 1.0 + disc) / 2.0));
    }

    #[test]
    fn cubic_examples() {
        let r = real_roots_cubic(0.0, -1.0, 0.0).unwrap();
        assert!(close(r[0], -1.0) && close(r[1], 0.0) && close(r[2], 1.0));
        // (t − 2)²(t + 1) = t³ − 3t² + 4: double root exercises the fallback
        let r = real_roots_cubic(-3.0, 0.0, 4.0).unwrap();
        assert!((r[0] + 1.0).abs() < 1e-10 && (r[1] - 2.0).abs() < 1e-7 && (r[2] - 2.0).abs() < 1e-7);
        // triple root
        let r = real_roots_cubic(-3.0, 3.0, -1.0).unwrap();
        assert!(r.iter().all(|x| (x - 1.0).abs() < 1e-5));
        assert!(real_roots_cubic(0.0, 1.0, 0.0).is_err());
    }
}
