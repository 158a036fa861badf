#![no_main]

use std::sync::OnceLock;

use heckekit::{build_root_datum, AffineWeylGroup, LatticeKind};
use libfuzzer_sys::fuzz_target;
use std::sync::Arc;

fn groups() -> &'static [Arc<AffineWeylGroup>] {
    static G: OnceLock<Vec<Arc<AffineWeylGroup>>> = OnceLock::new();
    G.get_or_init(|| {
        [("A1", LatticeKind::Weight), ("A2", LatticeKind::Root), ("B2", LatticeKind::Weight), ("D4", LatticeKind::Weight)]
            .into_iter()
            .map(|(l, k)| AffineWeylGroup::new(build_root_datum(l, k).unwrap()).unwrap())
            .collect()
    })
}

fuzz_target!(|data: &str| {
    for g in groups() {
        if let Ok(w) = g.parse_element(data) {
            let again = g.parse_element(&g.format_element(&w)).expect("printed form parses");
            assert_eq!(w, again);
        }
    }
});
