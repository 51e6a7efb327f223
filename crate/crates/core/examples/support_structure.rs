//! Projections and supports of Singleton-optimal codes, and a code beating q^(n - d/2).

use insdel::bounds::{
    full_projection_check, project_code, remark_counterexample, verify_support_structure,
};
use insdel::galois::Field;
use insdel::rs::{RsCode, MAX_MESSAGES};
use insdel::{Code, Word};

fn main() -> insdel::Result<()> {
    let f = Field::prime(5)?;
    let rs = RsCode::from_codes(&f, &[0, 1, 2, 3], 2)?;
    let words = rs
        .codewords(MAX_MESSAGES)?
        .into_iter()
        .map(|w| Word::new(5, w))
        .collect::<insdel::Result<Vec<_>>>()?;
    let code = Code::insdel(5, 4, words)?;

    let cube = full_projection_check(&code)?;
    println!(
        "d_H {}, optimal {}, every 3-position projection full: {}",
        cube.hamming_distance, cube.singleton_optimal, cube.all_full
    );
    println!(
        "projection onto positions 0 and 2 has {} words",
        project_code(&code, &[0, 2])?.len()
    );
    for (support, count) in verify_support_structure(&code, 2)?.counts {
        println!("support {support:?}: {count} codewords");
    }

    let c = remark_counterexample(5, 4)?;
    println!("{} words at insdel distance {}:", c.code.len(), c.distance);
    print!("{}", c.code.to_text());
    Ok(())
}
