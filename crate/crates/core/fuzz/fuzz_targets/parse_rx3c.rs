#![no_main]

use approval_bribery::io::{parse_rx3c, write_rx3c};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(inst) = parse_rx3c(text) {
        let again = parse_rx3c(&write_rx3c(&inst)).expect("canonical text parses");
        assert_eq!(inst, again);
    }
});
