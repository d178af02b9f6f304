#![no_main]

use approval_bribery::io::InstanceParams;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(p) = InstanceParams::from_json(text) {
        assert_eq!(InstanceParams::from_json(&p.to_json()).expect("written params parse"), p);
    }
});
