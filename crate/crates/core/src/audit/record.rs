//! Line-oriented text form of [`AuditVerdict`]:
//!
//! ```text
//! verdict=CONTRACTV_BAND
//! check=stated
//! subject=edge 0
//! mode=degrees:global loops:once
//! expect=refutable
//! holds=false
//! relation=le
//! lhs=3
//! rhs=2
//! detail=d_u=2 d_v=2 d_w=3
//! digest=5f0c4a...
//! instance:
//! HG1 5 4
//! ...
//! end
//! ```
//!
//! `detail` is optional. Records in a stream are separated by blank lines.

use std::fmt;

use super::{AuditMode, AuditVerdict, Check, Expectation, Relation, Subject, TheoremId};
use crate::error::{HedgeError, Result};
use crate::graph::{HedgeDegreeMode, LoopConvention};

fn malformed(msg: impl Into<String>) -> HedgeError {
    HedgeError::MalformedRecord(msg.into())
}

impl fmt::Display for Subject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Subject::Whole => f.write_str("whole"),
            Subject::Hedge(name) => write!(f, "hedge {name}"),
            Subject::Edge(i) => write!(f, "edge {i}"),
            Subject::Order(names) => write!(f, "order {}", names.join(" ")),
            Subject::Pair { contracted, observed } => write!(f, "pair {contracted} {observed}"),
        }
    }
}

impl Subject {
    fn parse(s: &str) -> Result<Self> {
        let mut toks = s.split_whitespace();
        let kind = toks.next().unwrap_or("");
        let rest: Vec<&str> = toks.collect();
        let bad = || malformed(format!("bad subject {s:?}"));
        match (kind, rest.as_slice()) {
            ("whole", []) => Ok(Subject::Whole),
            ("hedge", [name]) => Ok(Subject::Hedge(name.to_string())),
            ("edge", [i]) => i.parse().map(Subject::Edge).map_err(|_| bad()),
            ("order", names) if !names.is_empty() => {
                Ok(Subject::Order(names.iter().map(|s| s.to_string()).collect()))
            }
            ("pair", [a, b]) => Ok(Subject::Pair {
                contracted: a.to_string(),
                observed: b.to_string(),
            }),
            _ => Err(bad()),
        }
    }
}

impl fmt::Display for AuditMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degrees = match self.degrees {
            HedgeDegreeMode::Global => "global",
            HedgeDegreeMode::Induced => "induced",
        };
        let loops = match self.loops {
            LoopConvention::CountOnce => "once",
            LoopConvention::Ignore => "ignore",
        };
        write!(f, "degrees:{degrees} loops:{loops}")
    }
}

impl AuditMode {
    fn parse(s: &str) -> Result<Self> {
        let mut mode = AuditMode::default();
        let mut seen = (false, false);
        for tok in s.split_whitespace() {
            match tok {
                "degrees:global" => mode.degrees = HedgeDegreeMode::Global,
                "degrees:induced" => mode.degrees = HedgeDegreeMode::Induced,
                "loops:once" => mode.loops = LoopConvention::CountOnce,
                "loops:ignore" => mode.loops = LoopConvention::Ignore,
                _ => return Err(malformed(format!("bad mode {s:?}"))),
            }
            if tok.starts_with("degrees:") {
                seen.0 = true;
            } else {
                seen.1 = true;
            }
        }
        if seen != (true, true) {
            return Err(malformed(format!("bad mode {s:?}")));
        }
        Ok(mode)
    }
}

impl fmt::Display for AuditVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "verdict={}", self.theorem)?;
        writeln!(f, "check={}", self.check.name())?;
        writeln!(f, "subject={}", self.subject)?;
        writeln!(f, "mode={}", self.mode)?;
        writeln!(f, "expect={}", self.expect.name())?;
        writeln!(f, "holds={}", self.holds)?;
        writeln!(f, "relation={}", self.relation.name())?;
        writeln!(f, "lhs={}", self.lhs)?;
        writeln!(f, "rhs={}", self.rhs)?;
        if let Some(detail) = &self.detail {
            writeln!(f, "detail={detail}")?;
        }
        writeln!(f, "digest={}", self.digest)?;
        writeln!(f, "instance:")?;
        f.write_str(&self.instance)?;
        writeln!(f, "end")
    }
}

impl AuditVerdict {
    /// Parses one record as written by `Display`.
    pub fn parse_record(text: &str) -> Result<Self> {
        let mut lines = text.lines().map(str::trim_end).skip_while(|l| l.is_empty());
        let mut fields: Vec<(&str, &str)> = Vec::new();
        loop {
            let line = lines
                .next()
                .ok_or_else(|| malformed("missing `instance:` section"))?;
            if line == "instance:" {
                break;
            }
            let kv = line
                .split_once('=')
                .ok_or_else(|| malformed(format!("expected key=value, got {line:?}")))?;
            fields.push(kv);
        }
        let mut instance = String::new();
        loop {
            match lines.next() {
                Some("end") => break,
                Some(line) => {
                    instance.push_str(line);
                    instance.push('\n');
                }
                None => return Err(malformed("missing `end`")),
            }
        }
        if lines.any(|l| !l.is_empty()) {
            return Err(malformed("trailing text after `end`"));
        }

        let f = &mut fields;
        let theorem: TheoremId = need(f, "verdict")?.parse()?;
        let check: Check = need(f, "check")?.parse()?;
        let subject = Subject::parse(need(f, "subject")?)?;
        let mode = AuditMode::parse(need(f, "mode")?)?;
        let expect = match need(f, "expect")? {
            "holds" => Expectation::Holds,
            "refutable" => Expectation::Refutable,
            other => return Err(malformed(format!("bad expect {other:?}"))),
        };
        let holds = need(f, "holds")?.parse().map_err(|_| malformed("bad holds"))?;
        let relation = match need(f, "relation")? {
            "le" => Relation::Le,
            "ge" => Relation::Ge,
            "eq" => Relation::Eq,
            other => return Err(malformed(format!("bad relation {other:?}"))),
        };
        let int = |s: &str| {
            s.parse::<i64>()
                .map_err(|_| malformed(format!("bad integer {s:?}")))
        };
        let lhs = int(need(f, "lhs")?)?;
        let rhs = int(need(f, "rhs")?)?;
        let digest = need(f, "digest")?.to_string();
        let detail = take(f, "detail").map(str::to_string);
        if let Some((key, _)) = fields.first() {
            return Err(malformed(format!("unexpected or repeated field {key:?}")));
        }
        Ok(AuditVerdict {
            theorem,
            check,
            subject,
            mode,
            expect,
            holds,
            relation,
            lhs,
            rhs,
            detail,
            digest,
            instance,
        })
    }
}

fn take<'a>(fields: &mut Vec<(&'a str, &'a str)>, key: &str) -> Option<&'a str> {
    let at = fields.iter().position(|(k, _)| *k == key)?;
    Some(fields.remove(at).1)
}

fn need<'a>(fields: &mut Vec<(&'a str, &'a str)>, key: &str) -> Result<&'a str> {
    take(fields, key).ok_or_else(|| malformed(format!("missing {key}")))
}

/// Splits a stream of records on blank lines between `end` and the next
/// `verdict=`, ignoring other output lines outside records.
pub fn parse_records(text: &str) -> Result<Vec<AuditVerdict>> {
    let mut out = Vec::new();
    let mut current: Option<String> = None;
    for line in text.lines() {
        match &mut current {
            None if line.starts_with("verdict=") => current = Some(format!("{line}\n")),
            None => {}
            Some(buf) => {
                buf.push_str(line);
                buf.push('\n');
                if line == "end" {
                    out.push(AuditVerdict::parse_record(buf)?);
                    current = None;
                }
            }
        }
    }
    if current.is_some() {
        return Err(malformed("unterminated record"));
    }
    Ok(out)
}
