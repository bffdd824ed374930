#![no_main]

use f23::scene::Scene;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(scene) = serde_json::from_slice::<Scene>(data) {
        let json = serde_json::to_string(&scene).unwrap();
        let back: Scene = serde_json::from_str(&json).unwrap();
        assert_eq!(back, scene);
        // resolving the oracle and sampler must not panic
        let _ = scene.oracle();
        let _ = scene.sampler();
    }
});
