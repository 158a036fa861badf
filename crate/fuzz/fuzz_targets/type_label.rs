#![no_main]

use heckekit::CartanType;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &str| {
    if let Ok(t) = data.parse::<CartanType>() {
        assert_eq!(t, t.to_string().parse::<CartanType>().unwrap());
    }
});
