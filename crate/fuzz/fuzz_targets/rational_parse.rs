#![no_main]

use f23::rat::Rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(s) = std::str::from_utf8(data) {
        if let Ok(r) = s.parse::<Rational>() {
            // parsed values must print back to something that re-parses
            // to the same value
            let again: Rational = r.to_string().parse().unwrap();
            assert_eq!(again, r);
        }
    }
});
