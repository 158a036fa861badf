#![no_main]

use std::sync::{Arc, OnceLock};

use heckekit::{build_root_datum, AffineWeylGroup, HeckeAlgebra, LatticeKind};
use libfuzzer_sys::fuzz_target;

fn algebra() -> &'static Arc<HeckeAlgebra> {
    static H: OnceLock<Arc<HeckeAlgebra>> = OnceLock::new();
    H.get_or_init(|| {
        let d = build_root_datum("A2", LatticeKind::Weight).unwrap();
        HeckeAlgebra::new(AffineWeylGroup::new(d).unwrap())
    })
}

fuzz_target!(|data: &str| {
    let h = algebra();
    if let Ok(x) = h.parse_json(data) {
        let json = h.to_json(&x).unwrap();
        assert_eq!(h.parse_json(&json).unwrap(), x);
    }
});
