#![no_main]

use heckekit::Weight;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(w) = data.parse::<Weight>() {
        assert_eq!(w, w.to_string().parse::<Weight>().unwrap());
    }
});
