//! Snapshots of the referenced sequences, 30 terms each, so comparisons
//! work without network access. The files were generated by a direct
//! dynamic program over the plain step sets; the integration tests
//! cross-check every snapshot against the library's own counting routes
//! and a set of frozen literals.

/// A-numbers with a bundled snapshot.
pub const BUNDLED_SEQUENCES: [&str; 7] = [
    "A001006", "A002426", "A026520", "A026945", "A082758", "A099250", "A214938",
];

pub(crate) fn bundled(a_number: &str) -> Option<&'static str> {
    match a_number {
        "A001006" => Some(include_str!("../data/b001006.txt")),
        "A002426" => Some(include_str!("../data/b002426.txt")),
        "A026520" => Some(include_str!("../data/b026520.txt")),
        "A026945" => Some(include_str!("../data/b026945.txt")),
        "A082758" => Some(include_str!("../data/b082758.txt")),
        "A099250" => Some(include_str!("../data/b099250.txt")),
        "A214938" => Some(include_str!("../data/b214938.txt")),
        _ => None,
    }
}
