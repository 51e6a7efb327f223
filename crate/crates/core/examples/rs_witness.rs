//! Two codewords of RS(n, k), k >= 3, sharing a long common subsequence.

use insdel::galois::Field;
use insdel::rs::{close_pair_witness, RsCode};

fn main() -> insdel::Result<()> {
    for (q, n, k) in [
        (7u64, 6usize, 3usize),
        (101, 6, 3),
        (103, 11, 4),
        (128, 17, 5),
    ] {
        let f = Field::of_order(q)?;
        let code = RsCode::from_codes(&f, &(0..n as u64).collect::<Vec<_>>(), k)?;
        let w = close_pair_witness(&code)?;
        let idx = w.indices.one_based();
        println!("GF({q}) n={n} k={k} ({:?})", w.case);
        println!("  f = {:?}, g = {:?}", w.f.codes(), w.g.codes());
        println!("  positions i = {:?}, j = {:?}", idx.i, idx.j);
        println!(
            "  lcs {} >= {}, insdel {} <= {}",
            w.lcs,
            2 * k - 2,
            w.insdel,
            w.bound
        );
    }
    Ok(())
}
