use axial_spectrum::farey::canonical_fractions_up_to_order;
use axial_spectrum::roots::solve_raw_for_calibration;
use axial_spectrum::*;
use num_complex::Complex64;
use std::time::Instant;

fn functional(mu: Complex64, p: Order, q: Order) -> f64 {
    let ss = p.sin_pi_over() * q.sin_pi_over();
    (mu - 2.0 * ss).norm_sqr() + mu.norm() * (mu - 4.0 * ss).norm()
}

fn raw_c(f: FareyFraction, p: Order, q: Order) -> (FareyFraction, Result<f64>, f64) {
    let direct = trace_polynomial(f, p, q);
    let mirrored = trace_polynomial(f.mirror(), p, q);
    let (probe, poly, shift) = if mirrored.max_coeff_modulus() < direct.max_coeff_modulus() {
        let s = 4.0 * p.sin_pi_over() * q.sin_pi_over();
        (f.mirror(), mirrored, Some(s))
    } else {
        (f, direct, None)
    };
    let scale = poly.max_coeff_modulus();
    let out = solve_raw_for_calibration(&poly, 120).map(|roots| {
        roots
            .iter()
            .map(|&z| {
                let mu = match shift {
                    Some(s) => Complex64::new(s, 0.0) - z,
                    None => z,
                };
                functional(mu, p, q)
            })
            .fold(f64::NEG_INFINITY, f64::max)
    });
    let _ = probe;
    (f, out, scale)
}

fn main() {
    let three = Order::Finite(3);
    let t0 = Instant::now();
    let fracs = canonical_fractions_up_to_order(125);
    println!("{} canonical fractions of order <= 125", fracs.len());

    let mut rows: Vec<(FareyFraction, f64, f64)> = Vec::new();
    let mut failures: Vec<(FareyFraction, f64)> = Vec::new();
    let mut big_coeff = 0usize;
    for &f in &fracs {
        let (f, out, scale) = raw_c(f, three, three);
        if scale > 1e10 {
            big_coeff += 1;
        }
        match out {
            Ok(c) => rows.push((f, c, scale)),
            Err(_) => failures.push((f, scale)),
        }
    }
    println!(
        "raw pass: {} ok, {} failures, {} with max|coeff| > 1e10, {:.1}s",
        rows.len(),
        failures.len(),
        big_coeff,
        t0.elapsed().as_secs_f64()
    );
    rows.sort_by(|a, b| a.1.total_cmp(&b.1));
    println!("top 25 raw (fraction, c_raw, max|coeff| of solved mirror):");
    for (f, c, scale) in rows.iter().take(25) {
        println!("  {f}: {c:.8}  ({scale:.2e})");
    }
    println!("failures (fraction, max|coeff| of solved mirror):");
    for (f, scale) in failures.iter().take(30) {
        println!("  {f}: {scale:.2e}");
    }
}
