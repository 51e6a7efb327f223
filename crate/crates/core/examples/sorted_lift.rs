//! Lifting a constant-weight L1 code to an insdel code of sorted words.

use insdel::cw_l1::{construct_l1, L1Params};
use insdel::lift::{guarantee_ratio, lift, lift_guarantee, DEFAULT_MAX_PAIRS};

fn main() -> insdel::Result<()> {
    let built = construct_l1(&L1Params::new(3, 7, 2))?;
    let lifted = lift(&built.code, DEFAULT_MAX_PAIRS)?;
    println!("{:?}", lifted.report);
    for w in lifted.code.words().unwrap_or_default().iter().take(5) {
        println!("  {:?}", w.symbols());
    }

    println!("q   guarantee  ceiling  ratio   (n=6, delta=2)");
    for q in [8, 16, 32, 64] {
        let g = lift_guarantee(q, 6, 2)?;
        println!(
            "{q:<3} {:<10} {:<8} {:.3e}",
            g.guarantee,
            g.singleton_ceiling,
            guarantee_ratio(&g)
        );
    }
    Ok(())
}
