//! Job files, command dispatch and output formatting for `ftau`.

pub mod emit;
pub mod exec;
pub mod job;

pub use emit::{emit_result, error_value};
pub use exec::{execute, Execution, Outcome};
pub use job::{parse_job, CommandKind, Format, JobSpec};

/// Parses, runs and formats one job document; returns the text and exit code.
/// `force_json` overrides the document's `format` setting.
pub fn run_document(text: &str, force_json: bool) -> (String, i32) {
    match parse_job(text) {
        Err(e) => {
            let fmt = if force_json {
                Format::Json
            } else {
                Format::Canonical
            };
            let out = match fmt {
                Format::Json => format!("{}\n", error_value(&e)),
                Format::Canonical => format!("error: {e}\n"),
            };
            (out, e.exit_code())
        }
        Ok(job) => {
            let fmt = if force_json {
                Format::Json
            } else {
                job.params.format
            };
            let res = execute(&job);
            let code = res.as_ref().err().map_or(0, |e| e.exit_code());
            (emit_result(job.command, &res, fmt), code)
        }
    }
}
