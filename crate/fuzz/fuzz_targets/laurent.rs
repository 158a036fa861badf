#![no_main]

use heckekit::LaurentPoly;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(p) = data.parse::<LaurentPoly>() {
        let again: LaurentPoly = p.to_string().parse().expect("printed form parses");
        assert_eq!(p, again);
    }
});
