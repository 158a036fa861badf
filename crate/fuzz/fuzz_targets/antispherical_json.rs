#![no_main]

use std::sync::OnceLock;

use heckekit::{build_root_datum, AffineWeylGroup, AntisphericalModule, HeckeAlgebra, LatticeKind};
use libfuzzer_sys::fuzz_target;

fn module() -> &'static AntisphericalModule {
    static M: OnceLock<AntisphericalModule> = OnceLock::new();
    M.get_or_init(|| {
        let d = build_root_datum("A1", LatticeKind::Weight).unwrap();
        AntisphericalModule::new(HeckeAlgebra::new(AffineWeylGroup::new(d).unwrap()))
    })
}

fuzz_target!(|data: &str| {
    let m = module();
    if let Ok(x) = m.parse_json(data) {
        let json = m.to_json(&x).unwrap();
        assert_eq!(m.parse_json(&json).unwrap(), x);
    }
});
