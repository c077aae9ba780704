use std::io::Write;

use crate::classify::NormClass;
use crate::error::ZeroModeError;
use crate::mode::ZeroModeSpec;

/// One line of the mode table; `l2_norm` is `None` when divergent or not computed.
#[derive(Clone, Debug, PartialEq)]
pub struct ModeRow {
    pub spec: ZeroModeSpec,
    pub class: NormClass,
    pub residual_max: f64,
    pub l2_norm: Option<f64>,
}

/// Writes `n,degree,N,m,exponents,ell,kappa,class,residual_max,l2_norm`.
/// `N` and `m` are blank for `n > 1`; exponents are `;`-separated.
pub fn write_mode_table<W: Write>(rows: &[ModeRow], out: W) -> Result<(), ZeroModeError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record([
        "n", "degree", "N", "m", "exponents", "ell", "kappa", "class", "residual_max", "l2_norm",
    ])?;
    for row in rows {
        let (n, degree, big_n, m, exps, ell, kappa) = match &row.spec {
            ZeroModeSpec::Eh(s) => (
                1,
                s.two_n(),
                s.big_n().to_string(),
                s.m().to_string(),
                s.exponents().to_vec(),
                s.ell(),
                s.kappa(),
            ),
            ZeroModeSpec::General(s) => (
                s.params().n(),
                s.degree(),
                String::new(),
                String::new(),
                s.exponents().to_vec(),
                s.ell(),
                s.params().kappa(),
            ),
        };
        let exps: Vec<String> = exps.iter().map(u32::to_string).collect();
        w.write_record([
            n.to_string(),
            degree.to_string(),
            big_n,
            m,
            exps.join(";"),
            ell.to_string(),
            kappa.to_string(),
            row.class.to_string(),
            format!("{:.6e}", row.residual_max),
            row.l2_norm.map_or("NaN".to_string(), |v| format!("{v:.12e}")),
        ])?;
    }
    w.flush().map_err(csv::Error::from)?;
    Ok(())
}
