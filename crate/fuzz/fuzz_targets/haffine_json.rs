#![no_main]

use f23::carnot::Point;
use f23::haffine::{eval, HAffine};
use f23::rat::Rational;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(phi) = serde_json::from_slice::<HAffine>(data) {
        let json = serde_json::to_string(&phi).unwrap();
        let back: HAffine = serde_json::from_str(&json).unwrap();
        assert_eq!(back, phi);
        // evaluation must not panic on any parsed function
        let _ = eval(
            &phi,
            &Point::new(
                [Rational::one(), Rational::zero(), Rational::int(-1)],
                [Rational::zero(), Rational::one(), Rational::zero()],
            ),
        );
    }
});
