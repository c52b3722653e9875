use serde::Serialize;

use crate::args::Format;

/// A command's result: flat records for CSV and markdown, and a JSON payload.
pub struct Output {
    pub csv: String,
    pub json: String,
    pub ok: bool,
}

impl Output {
    pub fn new<R: Serialize, J: Serialize>(records: &[R], json: &J, ok: bool) -> Output {
        Output { csv: to_csv(records), json: serde_json::to_string_pretty(json).expect("serializable") + "\n", ok }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.csv.clone(),
            Format::Json => self.json.clone(),
            Format::Markdown => markdown(&self.csv),
        }
    }
}

fn to_csv<R: Serialize>(records: &[R]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in records {
        w.serialize(r).expect("flat record");
    }
    String::from_utf8(w.into_inner().expect("in-memory writer")).expect("utf-8")
}

fn markdown(csv_text: &str) -> String {
    let mut r = csv::ReaderBuilder::new().has_headers(false).from_reader(csv_text.as_bytes());
    let mut out = String::new();
    for (i, rec) in r.records().enumerate() {
        let rec = rec.expect("own csv");
        let cells: Vec<String> = rec.iter().map(|c| c.replace('|', "\\|")).collect();
        out += &format!("| {} |\n", cells.join(" | "));
        if i == 0 {
            out += &format!("|{}\n", " --- |".repeat(cells.len()));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[derive(Serialize)]
    struct Row {
        a: &'static str,
        b: i64,
    }

    #[test]
    fn formats() {
        let o = Output::new(&[Row { a: "x|y", b: -1 }], &vec![1], true);
        assert_eq!(o.render(Format::Csv), "a,b\nx|y,-1\n");
        assert_eq!(o.render(Format::Markdown), "| a | b |\n| --- | --- |\n| x\\|y | -1 |\n");
        assert_eq!(o.render(Format::Json), "[\n  1\n]\n");
    }
}
