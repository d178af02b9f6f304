#![no_main]

use approval_bribery::io::{parse_election, write_election};
use libfuzzer_sys::fuzz_target;

// Accepted elections must survive a write/parse round trip unchanged.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(e) = parse_election(text) {
        let again = parse_election(&write_election(&e)).expect("canonical text parses");
        assert_eq!(e, again);
    }
});
