//! Bundled problem files: the worked examples of non-abelian extensions
//! and the trivial direct-sum extension.

use crate::error::{Error, Result};
use crate::problem::ProblemFile;

/// `(file name, contents)` for every bundled problem, in report order.
pub const CORPUS: [(&str, &str); 12] = [
    ("example1.tlx", include_str!("../corpus/example1.tlx")),
    ("example2_family1.tlx", include_str!("../corpus/example2_family1.tlx")),
    ("example2_family2.tlx", include_str!("../corpus/example2_family2.tlx")),
    ("example2_family3.tlx", include_str!("../corpus/example2_family3.tlx")),
    ("example2_family4.tlx", include_str!("../corpus/example2_family4.tlx")),
    ("example2_family5.tlx", include_str!("../corpus/example2_family5.tlx")),
    ("example2_family6.tlx", include_str!("../corpus/example2_family6.tlx")),
    ("example2_family7.tlx", include_str!("../corpus/example2_family7.tlx")),
    ("example2_family8.tlx", include_str!("../corpus/example2_family8.tlx")),
    ("example2_family9.tlx", include_str!("../corpus/example2_family9.tlx")),
    ("example2_family10.tlx", include_str!("../corpus/example2_family10.tlx")),
    ("direct_sum.tlx", include_str!("../corpus/direct_sum.tlx")),
];

/// Source text of a bundled file.
pub fn source(name: &str) -> Result<&'static str> {
    CORPUS
        .iter()
        .find(|(n, _)| *n == name)
        .map(|(_, s)| *s)
        .ok_or_else(|| Error::Io(format!("no bundled problem named `{name}`")))
}

/// Parses a bundled file.
pub fn load(name: &str) -> Result<ProblemFile> {
    ProblemFile::parse(source(name)?)
}
