#![no_main]

use libfuzzer_sys::fuzz_target;
use traffic_graph::dsl::{parse_dsl, serialize};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(parsed) = parse_dsl(text) {
        let again = parse_dsl(&serialize(&parsed)).expect("serialized graphs parse");
        assert_eq!(again, parsed);
    }
});
