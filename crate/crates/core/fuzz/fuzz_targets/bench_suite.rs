#![no_main]

use std::path::Path;

use approval_bribery::bench::Suite;
use libfuzzer_sys::fuzz_target;

// Decoding plus instance generation; solving is not fuzzed here. Large random
// counts are skipped so a single input cannot stall the run.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let Ok(mut suite) = Suite::from_json(text) else { return };
    suite.instances.clear();
    if let Some(r) = &mut suite.random {
        r.count = r.count.min(16);
        if r.m[1] > 8 || r.n[1] > 64 {
            return;
        }
    }
    let _ = suite.instances(Path::new("."));
});
