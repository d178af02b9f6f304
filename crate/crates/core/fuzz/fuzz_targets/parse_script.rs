#![no_main]

use approval_bribery::io::{parse_script, write_script};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok((op, script)) = parse_script(text) {
        let again = parse_script(&write_script(op, &script)).expect("written script parses");
        assert_eq!((op, script), again);
    }
});
