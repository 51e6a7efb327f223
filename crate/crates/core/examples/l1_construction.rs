//! Largest fiber of the residue map on a Johnson space: a constant-weight L1 code.

use insdel::cw_l1::{construct_l1, verify_l1_code, L1Params};

fn main() -> insdel::Result<()> {
    let built = construct_l1(&L1Params::new(4, 8, 2).with_r(5))?;
    let r = &built.report;
    println!("q={} n={} delta={} r={}", r.q, r.n, r.delta, r.r);
    println!(
        "kept {} of {} compositions; guarantee {}",
        r.size, r.johnson_size, r.guaranteed_lower_bound
    );
    println!("verified min L1 distance {:?}", r.verified_min_l1);
    let mut sizes: Vec<u64> = built.bucket_sizes.values().copied().collect();
    sizes.sort_unstable();
    println!("fiber sizes {sizes:?}");
    println!(
        "code passes its own check: {}",
        verify_l1_code(&built.code, 2)?.ok
    );

    // r = q with an irreducible modulus of degree delta - 1
    let alt = construct_l1(&L1Params::new(3, 6, 3).with_irreducible_modulus(vec![1, 0, 1]))?;
    println!(
        "q=3 n=6 delta=3 over GF(3)[x]/(x^2+1): size {}, min L1 {:?}",
        alt.report.size, alt.report.verified_min_l1
    );
    print!("{}", alt.code.to_text());
    Ok(())
}
