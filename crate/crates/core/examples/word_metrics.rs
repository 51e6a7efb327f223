//! Distances between words, and the sorted-word correspondence with compositions.

use insdel::metrics::{hamming_distance, johnson_size, johnson_space, l1_distance, phi, psi};
use insdel::{insdel_distance, lcs_length, Composition, Word};

fn main() -> insdel::Result<()> {
    let u = Word::new(3, vec![0, 0, 1, 2, 0])?;
    let v = Word::new(3, vec![0, 2, 0, 0, 1])?;
    println!(
        "lcs {}  insdel {}  hamming {}",
        lcs_length(&u, &v)?,
        insdel_distance(&u, &v)?,
        hamming_distance(&u, &v)?
    );

    let a = Composition::new(vec![2, 0, 1])?;
    let b = Composition::new(vec![0, 2, 1])?;
    println!(
        "psi{:?} = {:?}, phi of that = {:?}",
        a.counts(),
        psi(&a).symbols(),
        phi(&psi(&a)).counts()
    );
    println!(
        "L1 {} equals insdel {} of the sorted words",
        l1_distance(&a, &b)?,
        insdel_distance(&psi(&a), &psi(&b))?
    );

    println!("J_3(4) has {} members:", johnson_size(3, 4));
    for c in johnson_space(3, 4) {
        print!(" {:?}", c.counts());
    }
    println!();
    Ok(())
}
