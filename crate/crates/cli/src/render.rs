//! Matrix printers: human tables, CSV, and JSON (polynomials as coefficient
//! lists). Rows and columns follow the documented table order; margins carry
//! the simple/projective dimensions where applicable.

use bihecke::coxeter::CoxeterGroup;
use bihecke::linalg::QPoly;
use bihecke::reptheory::table_order;

#[derive(Copy, Clone, PartialEq, Eq)]
pub enum MatrixFormat {
    Human,
    Csv,
    Json,
}

pub fn order_note(g: &CoxeterGroup) -> &'static str {
    if matches!(g.descriptor(), bihecke::coxeter::Descriptor::A(_)) {
        "one-line lexicographic order"
    } else {
        "BFS id order"
    }
}

/// Print a `|W| x |W|` id-indexed q-polynomial matrix with optional simple
/// dimensions (margins become `Simp.` and `Proj.`; without dims only `Proj.`).
pub fn print_qpoly_matrix(
    fmt: MatrixFormat,
    g: &CoxeterGroup,
    header: &str,
    c: &[Vec<QPoly>],
    simple_dims_by_id: Option<&[i64]>,
) {
    let order = table_order(g);
    let labels: Vec<String> = order.iter().map(|&w| g.label(w)).collect();
    let cells: Vec<Vec<String>> = order
        .iter()
        .map(|&u| order.iter().map(|&v| c[u.idx()][v.idx()].to_string()).collect())
        .collect();
    let dims: Option<Vec<i64>> =
        simple_dims_by_id.map(|d| order.iter().map(|&w| d[w.idx()]).collect());
    let ones = vec![1i64; order.len()];
    let d = dims.clone().unwrap_or(ones);
    let proj_rows: Vec<i64> = order
        .iter()
        .map(|&u| {
            order
                .iter()
                .enumerate()
                .map(|(j, &v)| c[u.idx()][v.idx()].eval_at_one() * d[j])
                .sum()
        })
        .collect();
    let proj_cols: Vec<i64> = (0..order.len())
        .map(|j| {
            order
                .iter()
                .enumerate()
                .map(|(i, &u)| c[u.idx()][order[j].idx()].eval_at_one() * d[i])
                .sum()
        })
        .collect();
    match fmt {
        MatrixFormat::Json => {
            let entries: Vec<Vec<Vec<i64>>> = order
                .iter()
                .map(|&u| order.iter().map(|&v| c[u.idx()][v.idx()].0.clone()).collect())
                .collect();
            let mut obj = serde_json::json!({
                "header": header,
                "labels": labels,
                "entries": entries,
                "projective_rows": proj_rows,
                "projective_cols": proj_cols,
            });
            if let Some(d) = &dims {
                obj["simple_dims"] = serde_json::json!(d);
            }
            println!("{}", serde_json::to_string_pretty(&obj).unwrap());
        }
        MatrixFormat::Csv => {
            println!("# {header}");
            let mut head = String::from("label");
            for l in &labels {
                head.push(',');
                head.push_str(l);
            }
            if dims.is_some() {
                head.push_str(",Simp.");
            }
            head.push_str(",Proj.");
            println!("{head}");
            for (i, l) in labels.iter().enumerate() {
                let mut line = l.clone();
                for cell in &cells[i] {
                    line.push(',');
                    line.push_str(cell);
                }
                if let Some(d) = &dims {
                    line.push_str(&format!(",{}", d[i]));
                }
                line.push_str(&format!(",{}", proj_rows[i]));
                println!("{line}");
            }
            if let Some(d) = &dims {
                let s: Vec<String> = d.iter().map(|x| x.to_string()).collect();
                println!("Simp.,{}", s.join(","));
            }
            let s: Vec<String> = proj_cols.iter().map(|x| x.to_string()).collect();
            println!("Proj.,{}", s.join(","));
        }
        MatrixFormat::Human => {
            println!("# {header}");
            let width = cells
                .iter()
                .flatten()
                .map(String::len)
                .chain(labels.iter().map(String::len))
                .max()
                .unwrap_or(1)
                .max(4);
            let lw = labels.iter().map(String::len).max().unwrap_or(4).max(5);
            let mut head = format!("{:lw$}", "");
            for l in &labels {
                head.push_str(&format!(" {l:>width$}"));
            }
            if dims.is_some() {
                head.push_str(" | Simp. Proj.");
            } else {
                head.push_str(" | Proj.");
            }
            println!("{head}");
            for (i, l) in labels.iter().enumerate() {
                let mut line = format!("{l:lw$}");
                for cell in &cells[i] {
                    line.push_str(&format!(" {cell:>width$}"));
                }
                if let Some(d) = &dims {
                    line.push_str(&format!(" | {:>5} {:>5}", d[i], proj_rows[i]));
                } else {
                    line.push_str(&format!(" | {:>5}", proj_rows[i]));
                }
                println!("{line}");
            }
            if let Some(d) = &dims {
                let mut foot = format!("{:lw$}", "Simp.");
                for x in d {
                    foot.push_str(&format!(" {x:>width$}"));
                }
                println!("{foot}");
            }
            let mut foot = format!("{:lw$}", "Proj.");
            for p in &proj_cols {
                foot.push_str(&format!(" {p:>width$}"));
            }
            println!("{foot}");
        }
    }
}

/// Print an integer matrix (counting Cartan or decomposition matrix); zeros
/// render as dots. With `row_margin_dims` present the row margin is the
/// matrix row sum (labelled `Simp.`).
pub fn print_integer_matrix(
    fmt: MatrixFormat,
    g: &CoxeterGroup,
    header: &str,
    c: &[Vec<i64>],
    row_sums_as_simple: Option<&[i64]>,
) {
    let poly: Vec<Vec<QPoly>> = c
        .iter()
        .map(|row| row.iter().map(|&v| QPoly::constant(v)).collect())
        .collect();
    match row_sums_as_simple {
        None => print_qpoly_matrix(fmt, g, header, &poly, None),
        Some(_) => {
            // decomposition-style display: the only margin is the row sum
            let order = table_order(g);
            let labels: Vec<String> = order.iter().map(|&w| g.label(w)).collect();
            let cells: Vec<Vec<String>> = order
                .iter()
                .map(|&u| {
                    order
                        .iter()
                        .map(|&v| {
                            let x = c[u.idx()][v.idx()];
                            if x == 0 { ".".into() } else { x.to_string() }
                        })
                        .collect()
                })
                .collect();
            let sums: Vec<i64> =
                order.iter().map(|&u| c[u.idx()].iter().sum::<i64>()).collect();
            match fmt {
                MatrixFormat::Json => {
                    println!(
                        "{}",
                        serde_json::to_string_pretty(&serde_json::json!({
                            "header": header,
                            "labels": labels,
                            "entries": order.iter().map(|&u| order.iter().map(|&v| c[u.idx()][v.idx()]).collect::<Vec<_>>()).collect::<Vec<_>>(),
                            "row_sums": sums,
                        }))
                        .unwrap()
                    );
                }
                MatrixFormat::Csv => {
                    println!("# {header}");
                    println!("label,{},Simp.", labels.join(","));
                    for (i, l) in labels.iter().enumerate() {
                        println!("{l},{},{}", cells[i].join(","), sums[i]);
                    }
                }
                MatrixFormat::Human => {
                    println!("# {header}");
                    let lw = labels.iter().map(String::len).max().unwrap_or(4).max(5);
                    let width = labels.iter().map(String::len).max().unwrap_or(1);
                    let mut head = format!("{:lw$}", "");
                    for l in &labels {
                        head.push_str(&format!(" {l:>width$}"));
                    }
                    head.push_str(" | Simp.");
                    println!("{head}");
                    for (i, l) in labels.iter().enumerate() {
                        let mut line = format!("{l:lw$}");
                        for cell in &cells[i] {
                            line.push_str(&format!(" {cell:>width$}"));
                        }
                        line.push_str(&format!(" | {:>5}", sums[i]));
                        println!("{line}");
                    }
                }
            }
        }
    }
}
