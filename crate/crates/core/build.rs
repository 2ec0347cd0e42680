// Generates integer coefficient tables of the cyclotomic polynomials Phi_1..Phi_MAX.
use std::env;
use std::fmt::Write as _;
use std::fs;
use std::path::Path;

const MAX_ORDER: usize = 128;

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dn = den.len() - 1;
    let mut quo = vec![0i64; num.len() - dn];
    for k in (0..quo.len()).rev() {
        let c = rem[k + dn];
        quo[k] = c;
        if c != 0 {
            for (t, &d) in den.iter().enumerate() {
                rem[k + t] -= c * d;
            }
        }
    }
    assert!(rem.iter().all(|&r| r == 0));
    quo
}

fn main() {
    let mut phis: Vec<Vec<i64>> = vec![Vec::new()];
    for n in 1..=MAX_ORDER {
        let mut p = vec![0i64; n + 1];
        p[0] = -1;
        p[n] = 1;
        for d in 1..n {
            if n % d == 0 {
                p = poly_div_exact(&p, &phis[d]);
            }
        }
        phis.push(p);
    }
    let mut out = String::new();
    writeln!(out, "pub(crate) const MAX_ORDER: u32 = {MAX_ORDER};").unwrap();
    writeln!(out, "static CYCLOTOMIC: [&[i64]; {}] = [", MAX_ORDER + 1).unwrap();
    for p in &phis {
        writeln!(out, "    &{p:?},").unwrap();
    }
    writeln!(out, "];").unwrap();
    let dest = Path::new(&env::var("OUT_DIR").unwrap()).join("cyclotomic.rs");
    fs::write(dest, out).unwrap();
    println!("cargo:rerun-if-changed=build.rs");
}
