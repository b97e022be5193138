use std::io::Write;
use std::path::Path;

use serde_json::Value;
use superwalk_core::Error;

/// Writes `text` to `path` through a temporary file in the same directory,
/// or to standard output.
pub fn emit(path: Option<&Path>, text: &str) -> Result<(), Error> {
    let io = |e: std::io::Error| Error::InvalidInput(format!("cannot write output: {e}"));
    match path {
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).map_err(io)?;
            out.flush().map_err(io)
        }
        Some(p) => {
            let dir = match p.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
            tmp.write_all(text.as_bytes()).map_err(io)?;
            tmp.persist(p).map_err(|e| io(e.error))?;
            Ok(())
        }
    }
}

pub fn json_text(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

pub fn json_lines(vs: &[Value]) -> String {
    vs.iter().map(|v| serde_json::to_string(v).expect("serializable") + "\n").collect()
}

pub fn csv_text(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for r in rows {
        w.write_record(r).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory write")).expect("utf-8")
}
