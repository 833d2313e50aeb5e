//! Shared reporting glue: verdict-to-exit-code mapping and the CSV summary
//! format for suite runs.

use crate::suites::CriterionResult;

/// Process exit contract: 0 verified/true, 1 falsified, 2 indeterminate
/// (precision or boundary), 10+ usage errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Verified,
    Falsified,
    Indeterminate,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Verified => 0,
            Verdict::Falsified => 1,
            Verdict::Indeterminate => 2,
        }
    }

    pub fn from_bool(ok: bool) -> Verdict {
        if ok {
            Verdict::Verified
        } else {
            Verdict::Falsified
        }
    }
}

pub const EXIT_USAGE: i32 = 10;
pub const EXIT_IO: i32 = 11;

/// CSV summary: one row per suite with verdict and timing.
pub fn results_to_csv(results: &[CriterionResult]) -> String {
    let mut out = String::from("id,name,pass,elapsed_ms\n");
    for r in results {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.id,
            r.name.replace(',', ";"),
            r.pass,
            r.elapsed_ms
        ));
    }
    out
}
