#![no_main]

use f23::scene::CertificateFile;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    if let Ok(cert) = serde_json::from_slice::<CertificateFile>(data) {
        let json = serde_json::to_string(&cert).unwrap();
        let back: CertificateFile = serde_json::from_str(&json).unwrap();
        assert_eq!(back, cert);
        // verification must be total: any parsed certificate gets a
        // boolean answer, never a panic
        let _ = cert.verify();
    }
});
