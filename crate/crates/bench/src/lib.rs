//! Inputs shared by the benchmarks.

use bintersect_core::Word;

/// A named pair of codes.
pub struct Workload {
    pub name: &'static str,
    pub codes: [Word; 4],
}

fn workload(name: &'static str, codes: [&str; 4]) -> Workload {
    Workload {
        name,
        codes: codes.map(Word::from),
    }
}

/// One instance of each outcome, plus a longer family instance.
pub fn workloads() -> Vec<Workload> {
    vec![
        workload("only-empty", ["abaab", "ababab", "a", "ba"]),
        workload("cyclic", ["aabb", "ab", "aba", "bab"]),
        workload("no-start-cyclic", ["aabb", "ab", "abaa", "bb"]),
        workload("family", ["aba", "aab", "a", "baaba"]),
        workload("family-long", ["aa", "aaaaaab", "a", "baaaa"]),
        workload("family-m8", ["a", "aaaaaaaab", "a", "baaaaaaaa"]),
    ]
}
