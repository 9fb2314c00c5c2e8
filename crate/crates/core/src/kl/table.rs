use super::family::{family, family_row_json, Family};
use crate::exact::{Poly, Rational};

/// Descending powers with the coefficient and power separated by a space,
/// e.g. `x^3-14 x^2+21 x-1`.
pub fn table_style(p: &Poly) -> String {
    let Some(deg) = p.degree() else {
        return "0".to_string();
    };
    let mut out = String::new();
    for k in (0..=deg).rev() {
        let c = p.coeff(k);
        if c.is_zero() {
            continue;
        }
        let mag = c.abs();
        if c.is_negative() {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        let unit = mag == Rational::one();
        match k {
            0 => out.push_str(&mag.to_string()),
            _ if unit => {}
            _ => {
                out.push_str(&mag.to_string());
                out.push(' ');
            }
        }
        match k {
            0 => {}
            1 => out.push('x'),
            _ => out.push_str(&format!("x^{k}")),
        }
    }
    out
}

fn label(fam: Family) -> &'static str {
    match fam {
        Family::P => "P",
        Family::PTilde => "Ptilde",
        Family::PHat => "Phat",
    }
}

/// Both blocks of the table, `P_0..P_max` then `Phat_0..Phat_max`, separated by
/// a blank line.
pub fn table1_text(max_n: usize) -> String {
    let block = |fam: Family| {
        (0..=max_n)
            .map(|n| format!("{}_{n}(x) = {}\n", label(fam), table_style(&family(fam, n))))
            .collect::<String>()
    };
    format!("{}\n{}", block(Family::P), block(Family::PHat))
}

pub fn table1_csv(max_n: usize) -> String {
    let mut out = String::from("family,n,polynomial\n");
    for fam in [Family::P, Family::PHat] {
        for n in 0..=max_n {
            out.push_str(&format!("{},{n},{}\n", label(fam), table_style(&family(fam, n))));
        }
    }
    out
}

pub fn table1_json(max_n: usize) -> String {
    let rows: Vec<_> = [Family::P, Family::PHat]
        .into_iter()
        .flat_map(|fam| (0..=max_n).map(move |n| family_row_json(fam, n)))
        .collect();
    serde_json::to_string(&rows).expect("table rows serialize")
}
