//! Two-dimensional Reed-Solomon codes reaching insdel distance 2n - 4.

use insdel::galois::Field;
use insdel::rs::{
    check_rs2_criterion, construct_rs2, rs2_threshold, rs_exhaustive_insdel, RsCode, MAX_MESSAGES,
};

fn main() -> insdel::Result<()> {
    for n in [4, 5, 6] {
        let code = construct_rs2(n, None)?;
        let alphas: Vec<u32> = code.alphas().iter().map(|a| a.code()).collect();
        println!(
            "n={n}: threshold {}, q={}, alphas {alphas:?}",
            rs2_threshold(n),
            code.field().order()
        );
    }

    let f7 = Field::prime(7)?;
    let naive = RsCode::from_codes(&f7, &[0, 1, 2, 3], 2)?;
    let verdict = check_rs2_criterion(&naive)?;
    println!(
        "alphas 0,1,2,3 over GF(7): criterion holds = {}",
        verdict.holds
    );
    if let Some(w) = verdict.witness {
        println!(
            "  x -> {}x + {} maps positions {:?} onto {:?}",
            w.sigma.a().code(),
            w.sigma.b().code(),
            w.i,
            w.j
        );
    }
    println!(
        "  exhaustive min insdel distance {}",
        rs_exhaustive_insdel(&naive, MAX_MESSAGES)?.distance
    );

    let greedy = construct_rs2(4, None)?;
    let sweep = rs_exhaustive_insdel(&greedy, MAX_MESSAGES)?;
    println!(
        "greedy n=4 code: all {} codewords swept, min insdel distance {}",
        greedy.message_count(),
        sweep.distance
    );
    Ok(())
}
