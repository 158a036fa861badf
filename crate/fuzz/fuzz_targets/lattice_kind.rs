#![no_main]

use heckekit::{build_root_datum, LatticeKind};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(k) = LatticeKind::parse(data) {
        assert_eq!(k, LatticeKind::parse(&k.to_string()).unwrap());
        // Construction validates rank and containment of the root lattice.
        let _ = build_root_datum("A2", k);
    }
});
