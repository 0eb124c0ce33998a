//! Count index triples by configuration class and compare with the closed forms.

use smallworld::configurations::{classify_triple, enumerate_counts, CountsReport};

fn main() -> smallworld::Result<()> {
    for (i1, i2, i3) in [(1, 2, 3), (1, 3, 5), (1, 2, 12), (1, 11, 21)] {
        println!(
            "({i1}, {i2}, {i3}) on n=30, k=4 is {}",
            classify_triple(i1, i2, i3, 30, 4)?
        );
    }

    for (n, k) in [(30, 4), (50, 6)] {
        let report = CountsReport::new(n, k, enumerate_counts(n, k)?);
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("report serialises")
        );
    }
    Ok(())
}
