//! Trajectory CSV: `t, x_1..x_n, p_1..p_n, H_1..H_n, method`.

use super::flow::TrajectorySample;
use crate::error::{Error, Result};

pub fn trajectory_header(n: usize) -> Vec<String> {
    let mut h = vec!["t".to_string()];
    for prefix in ["x", "p", "H"] {
        h.extend((1..=n).map(|i| format!("{prefix}_{i}")));
    }
    h.push("method".into());
    h
}

/// Rows of every sample in order, each tagged with its method name.
pub fn trajectory_csv(samples: &[(&str, &TrajectorySample)]) -> Result<String> {
    let n = samples.first().and_then(|(_, s)| s.states.first()).map_or(0, |p| p.n());
    let ser = |e: csv::Error| Error::Serialization(e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(trajectory_header(n)).map_err(ser)?;
    for (method, s) in samples {
        for ((t, pt), ints) in s.times.iter().zip(&s.states).zip(&s.integrals) {
            let mut row = vec![format!("{t}")];
            row.extend(pt.x.iter().chain(&pt.p).chain(ints).map(|v| format!("{v:e}")));
            row.push(method.to_string());
            w.write_record(&row).map_err(ser)?;
        }
    }
    let bytes = w.into_inner().map_err(|e| Error::Serialization(e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Error::Serialization(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cmflow::{ode_integrate, PhasePoint};

    #[test]
    fn schema() {
        let pt = PhasePoint::new(vec![0.0, 2.0], vec![-0.5, 0.5]).unwrap();
        let s = ode_integrate(&pt, 0.01, 0.005).unwrap();
        let out = trajectory_csv(&[("ode", &s)]).unwrap();
        let mut lines = out.lines();
        assert_eq!(lines.next(), Some("t,x_1,x_2,p_1,p_2,H_1,H_2,method"));
        assert_eq!(lines.count(), 3);
        assert!(out.trim_end().ends_with(",ode"));
    }
}
