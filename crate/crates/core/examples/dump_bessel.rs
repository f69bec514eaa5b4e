//! Dumps J_n(x) over a randomized grid for cross-checking against an
//! external arbitrary-precision reference.
use std::io::Write;

fn main() {
    let mut args = std::env::args().skip(1);
    let count: usize = args.next().and_then(|s| s.parse().ok()).unwrap_or(2000);
    let seed: u64 = args.next().and_then(|s| s.parse().ok()).unwrap_or(7);
    // xorshift for a dependency-free reproducible stream
    let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
    let mut next = move || {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        (state >> 11) as f64 / (1u64 << 53) as f64
    };
    let stdout = std::io::stdout();
    let mut out = stdout.lock();
    for _ in 0..count {
        let n = (next() * 501.0).floor() as i32;
        let x = next() * 500.0;
        let j = sfa_core::bessel::bessel_j(n, x).unwrap();
        writeln!(out, "{} {:.17e} {:.17e}", n, x, j).unwrap();
    }
}
