//! The built-in example models.

use crate::cli::document::ProblemDocument;

pub const GALLERY: [(&str, &str); 4] = [
    ("quadric-cone", include_str!("../../gallery/quadric-cone.json")),
    ("conifold", include_str!("../../gallery/conifold.json")),
    ("nqg-cone", include_str!("../../gallery/nqg-cone.json")),
    ("cusp-plane", include_str!("../../gallery/cusp-plane.json")),
];

pub fn names() -> Vec<&'static str> {
    GALLERY.iter().map(|(n, _)| *n).collect()
}

pub fn source(name: &str) -> Option<&'static str> {
    GALLERY.iter().find(|(n, _)| *n == name).map(|(_, s)| *s)
}

pub fn document(name: &str) -> Option<ProblemDocument> {
    source(name).map(|s| ProblemDocument::parse(s).expect("gallery documents are well formed"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn all_build() {
        for n in names() {
            let p = document(n).unwrap().build().unwrap();
            assert!(p.pairs.contains_key("trivial"), "{n}");
        }
    }
}
