//! Reading, checking and writing codes in the text format.

use insdel::{code_min_distance, Code, Metric};

const SAMPLE: &str = "# four binary words\nINSDEL 2 4 4\n0 0 0 0\n0 1 1 0\n1 1 1 1\n1 0 0 1\n";

fn main() -> insdel::Result<()> {
    let code = Code::from_text(SAMPLE)?;
    for metric in [Metric::Insdel, Metric::Hamming] {
        let md = code_min_distance(&code, metric)?;
        println!(
            "{metric:?}: {} between rows {} and {}",
            md.distance, md.pair.0, md.pair.1
        );
    }
    print!("{}", code.to_text());
    assert_eq!(Code::from_text(&code.to_text())?, code);

    let bad = "INSDEL 2 3 2\n0 0 0\n0 0 0\n";
    println!("duplicate rows: {}", Code::from_text(bad).unwrap_err());
    Ok(())
}
