//! Exact optima by clique search next to closed-form bounds.

use insdel::bounds::{bounds_report, exact_iq, field_threshold, support_threshold};

fn main() -> insdel::Result<()> {
    println!("q n d  exact  sub_singleton  singleton  levenshtein");
    for (q, n) in [(2, 3), (2, 4), (3, 3), (3, 4), (2, 5)] {
        for d in (2..=2 * n).step_by(2) {
            let exact = exact_iq(q, n, d, Some(60))?;
            let r = bounds_report(q, n, d)?;
            println!(
                "{q} {n} {d:<2} {:<6} {:<6} {:<10} {}",
                exact.size, r.sub_singleton, r.singleton, r.levenshtein_floor
            );
        }
    }

    let best = exact_iq(3, 4, 4, None)?;
    println!("an optimal code for q=3 n=4 d=4 ({} words):", best.size);
    print!("{}", best.code.to_text());

    let s = support_threshold(7, 12, 3, 2)?;
    println!(
        "Singleton-optimal [12,3] codes over GF(7): bound applies {}, d <= {:?}",
        s.bound_applies, s.d_max
    );
    let t = field_threshold(12, 3, 2)?;
    println!(
        "field sizes up to {} are covered ({} ~ {:.1})",
        t.max_q, t.base, t.approx
    );
    Ok(())
}
