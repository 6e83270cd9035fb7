//! Batch analysis of polytope files.

use std::path::{Path, PathBuf};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::conjectures::{analyze, AnalysisReport};
use crate::error::{Error, Result};
use crate::polytope::FanoPolytope;
use crate::shell::format::parse_file;
use crate::shell::report::report_json;

/// Process exit status; a more severe status wins when several apply.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ExitStatus {
    Ok = 0,
    InvalidPolytope = 1,
    TheoremViolation = 2,
    ParseError = 3,
}

impl ExitStatus {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Clone, Debug)]
pub struct BatchOutcome {
    pub output: Value,
    pub status: ExitStatus,
}

#[derive(Default)]
struct Summary {
    polytopes: usize,
    invalid: usize,
    theorem_violations: usize,
    conjecture_violations: usize,
    conjecture_violations_in_range: usize,
    internal_errors: usize,
    parse_errors: usize,
}

/// Regular files of `dir` sorted by path.
pub fn directory_files(dir: &Path) -> Result<Vec<PathBuf>> {
    let mut files = Vec::new();
    for entry in std::fs::read_dir(dir)? {
        let path = entry?.path();
        if path.is_file() {
            files.push(path);
        }
    }
    files.sort();
    Ok(files)
}

/// Analyzes every block of every file on a pool of `jobs` threads; reports
/// keep input order.
pub fn batch(paths: &[PathBuf], jobs: usize) -> Result<BatchOutcome> {
    let mut summary = Summary::default();
    let mut errors = Vec::new();
    let mut polytopes: Vec<(String, FanoPolytope)> = Vec::new();
    for path in paths {
        let file = path.display().to_string();
        match parse_file(path) {
            Ok(ps) => polytopes.extend(ps.into_iter().map(|p| (file.clone(), p))),
            Err(e @ (Error::Parse { .. } | Error::Shape { .. } | Error::Io(_))) => {
                summary.parse_errors += 1;
                errors.push(json!({"file": file, "error": e.to_string()}));
            }
            Err(e) => return Err(e),
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InternalInconsistency(e.to_string()))?;
    let results: Vec<Result<AnalysisReport>> =
        pool.install(|| polytopes.par_iter().map(|(_, p)| analyze(p)).collect());

    let mut reports = Vec::with_capacity(results.len());
    for ((file, p), result) in polytopes.iter().zip(results) {
        summary.polytopes += 1;
        match result {
            Ok(r) => {
                if !r.is_valid() {
                    summary.invalid += 1;
                }
                summary.theorem_violations += r.theorem_violations();
                summary.conjecture_violations += r.conjecture_violations();
                summary.conjecture_violations_in_range += r.conjecture_violations_in_range();
                let mut v = report_json(&r);
                v["file"] = json!(file);
                reports.push(v);
            }
            Err(e) => {
                summary.internal_errors += 1;
                errors.push(json!({"file": file, "polytope": p.name(), "error": e.to_string()}));
            }
        }
    }

    let status = if summary.parse_errors > 0 {
        ExitStatus::ParseError
    } else if summary.theorem_violations > 0 || summary.internal_errors > 0 {
        ExitStatus::TheoremViolation
    } else if summary.invalid > 0 {
        ExitStatus::InvalidPolytope
    } else {
        ExitStatus::Ok
    };
    let output = json!({
        "reports": reports,
        "errors": errors,
        "summary": {
            "files": paths.len(),
            "polytopes": summary.polytopes,
            "invalid": summary.invalid,
            "theorem_violations": summary.theorem_violations,
            "conjecture_violations": summary.conjecture_violations,
            "conjecture_violations_in_range": summary.conjecture_violations_in_range,
            "internal_errors": summary.internal_errors,
            "parse_errors": summary.parse_errors,
        },
    });
    Ok(BatchOutcome { output, status })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polytope::simplex;
    use crate::shell::format::to_text;

    #[test]
    fn empty_list() {
        let out = batch(&[], 2).unwrap();
        assert_eq!(out.status, ExitStatus::Ok);
        assert_eq!(out.output["summary"]["polytopes"], 0);
        assert_eq!(out.output["reports"], json!([]));
    }

    #[test]
    fn statuses() {
        let dir = tempfile::tempdir().unwrap();
        let good = dir.path().join("a.txt");
        std::fs::write(&good, to_text(&[simplex(2), simplex(3)])).unwrap();
        let bad = dir.path().join("b.txt");
        std::fs::write(&bad, "polytope bad\ndim 2\nv 2 0\nv 0 1\nv -1 -1\nend\n").unwrap();
        let broken = dir.path().join("c.txt");
        std::fs::write(&broken, "polytope x\ndim 2\nv 1\nend\n").unwrap();

        assert_eq!(
            batch(std::slice::from_ref(&good), 1).unwrap().status,
            ExitStatus::Ok
        );
        let out = batch(&[good.clone(), bad.clone()], 2).unwrap();
        assert_eq!(out.status, ExitStatus::InvalidPolytope);
        assert_eq!(out.output["summary"]["invalid"], 1);
        let out = batch(&[good, bad, broken], 2).unwrap();
        assert_eq!(out.status, ExitStatus::ParseError);
        assert_eq!(out.output["reports"].as_array().unwrap().len(), 3);
    }

    #[test]
    fn directory_listing_sorted() {
        let dir = tempfile::tempdir().unwrap();
        for name in ["b", "a", "c"] {
            std::fs::write(dir.path().join(name), "").unwrap();
        }
        std::fs::create_dir(dir.path().join("sub")).unwrap();
        let names: Vec<String> = directory_files(dir.path())
            .unwrap()
            .iter()
            .map(|p| p.file_name().unwrap().to_string_lossy().into_owned())
            .collect();
        assert_eq!(names, ["a", "b", "c"]);
    }
}
