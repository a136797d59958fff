//! Golden-file harness: the full subcommand pipeline over the committed
//! fixture corpus must reproduce the committed outputs byte for byte.
//!
//! Set `LEMMIK_BLESS=1` to regenerate `testdata/golden/` from the current
//! build before comparing.

mod common;

use std::fs;

use common::{run_pipeline, testdata, PIPELINE_OUTPUTS};

#[test]
fn pipeline_reproduces_the_committed_goldens() {
    let dir = tempfile::tempdir().expect("scratch dir");
    run_pipeline(dir.path());

    let golden = testdata().join("golden");
    if std::env::var_os("LEMMIK_BLESS").is_some() {
        fs::create_dir_all(&golden).expect("creating golden dir");
        for name in PIPELINE_OUTPUTS {
            fs::copy(dir.path().join(name), golden.join(name))
                .unwrap_or_else(|err| panic!("blessing {name}: {err}"));
        }
    }

    for name in PIPELINE_OUTPUTS {
        let produced = fs::read(dir.path().join(name))
            .unwrap_or_else(|err| panic!("pipeline did not produce {name}: {err}"));
        let expected = fs::read(golden.join(name))
            .unwrap_or_else(|err| panic!("missing golden {name}: {err}"));
        assert!(
            produced == expected,
            "{name} diverges from its golden:\n--- produced ---\n{}\n--- golden ---\n{}",
            String::from_utf8_lossy(&produced),
            String::from_utf8_lossy(&expected)
        );
    }
}
