use super::{GluedSurface, Sign};
use serde_json::{json, Value};
use std::fmt::Write;

impl GluedSurface {
    /// JSON description: faces with their words, edge list, vertices with
    /// rotations, and edge endpoints. Key order is sorted, so the output is
    /// byte-stable for a fixed complex.
    pub fn to_json(&self) -> Value {
        let vertices: Vec<Value> = self
            .vertices
            .iter()
            .map(|v| {
                let rotation: Vec<String> =
                    v.rotation.iter().map(|&d| dart_token(self.dart_symbol(d), d)).collect();
                json!({ "name": v.name, "rotation": rotation })
            })
            .collect();
        let endpoints: serde_json::Map<String, Value> = self
            .edges()
            .iter()
            .map(|sym| {
                let (tail, head) = self.endpoints(sym).expect("own edge");
                (sym.clone(), json!({ "tail": tail, "head": head }))
            })
            .collect();
        json!({
            "faces": self.faces(),
            "edges": self.edges(),
            "vertices": vertices,
            "endpoints": endpoints,
            "euler_characteristic": self.euler_characteristic(),
            "genus": self.genus(),
        })
    }

    /// 1-skeleton in DOT format: vertices carry their canonical corner names,
    /// directed edges carry the edge symbol.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        writeln!(out, "digraph \"{name}\" {{").unwrap();
        for v in &self.vertices {
            writeln!(out, "  \"{}\";", v.name).unwrap();
        }
        for sym in self.edges() {
            let (tail, head) = self.endpoints(sym).expect("own edge");
            writeln!(out, "  \"{tail}\" -> \"{head}\" [label=\"{sym}\"];").unwrap();
        }
        writeln!(out, "}}").unwrap();
        out
    }
}

fn dart_token(symbol: &str, dart: usize) -> String {
    if dart % 2 == 0 {
        format!("{symbol}+")
    } else {
        format!("{symbol}-")
    }
}

impl Sign {
    pub fn suffix(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

#[cfg(test)]
mod tests {
    use crate::surface_complex::{FaceWord, GluedSurface};

    #[test]
    fn dot_contains_every_edge() {
        let s = GluedSurface::glue(vec![FaceWord::parse("f", "a b a- b-")]).unwrap();
        let dot = s.to_dot("t");
        assert!(dot.contains("label=\"a\""));
        assert!(dot.contains("label=\"b\""));
        assert!(dot.starts_with("digraph \"t\""));
    }

    #[test]
    fn json_shape() {
        let s = GluedSurface::glue(vec![FaceWord::parse("f", "a a-")]).unwrap();
        let v = s.to_json();
        assert_eq!(v["edges"], serde_json::json!(["a"]));
        assert_eq!(v["genus"], serde_json::json!(0));
        assert_eq!(v["vertices"].as_array().unwrap().len(), 2);
    }
}
