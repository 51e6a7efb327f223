//! Runs the built-in acceptance criteria; pass criterion ids to run a subset.

fn main() {
    let ids: Vec<u32> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let outcomes = if ids.is_empty() {
        insdel::selftest::run_all()
    } else {
        ids.iter()
            .map(|&id| insdel::selftest::run(id).expect("criterion id in 1..=11"))
            .collect()
    };
    for o in &outcomes {
        println!("{}", o.line());
    }
    if outcomes.iter().any(|o| !o.pass) {
        std::process::exit(1);
    }
}
