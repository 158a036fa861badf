#![no_main]

use std::sync::{Arc, OnceLock};

use heckekit::{build_root_datum, LatticeKind, RootDatum};
use libfuzzer_sys::fuzz_target;

fn datum() -> &'static Arc<RootDatum> {
    static D: OnceLock<Arc<RootDatum>> = OnceLock::new();
    D.get_or_init(|| build_root_datum("B2", LatticeKind::Weight).unwrap())
}

fuzz_target!(|data: &str| {
    let d = datum();
    if let Ok(m) = d.parse_weight_multiset(data) {
        let json = serde_json::to_string(&RootDatum::weight_multiset_json(&m)).unwrap();
        assert_eq!(d.parse_weight_multiset(&json).unwrap(), m);
    }
});
