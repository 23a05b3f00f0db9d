use std::time::Instant;

use vcpath_series::{expand_named_gf, solve_kernel_roots, KernelId};

fn main() {
    let t0 = Instant::now();
    let roots = solve_kernel_roots(KernelId::SchroderW, 72);
    println!("solve SchroderW@72: {} ms", t0.elapsed().as_millis());
    drop(roots);

    for name in ["cHR0", "cH0", "cQR0", "cQ0", "dOH0"] {
        let t0 = Instant::now();
        let _ = expand_named_gf(name, 21).unwrap();
        println!("expand {name}@21: {} ms", t0.elapsed().as_millis());
    }
}
