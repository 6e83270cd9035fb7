//! Family specs and the standard test corpus.
//!
//! ```text
//! spec := "simplex:" N | "hexagon" | "product(" spec ("," spec)* ")"
//! ```

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::polytope::{free_sum, hexagon, simplex, FanoPolytope};
use crate::shell::enumerate::enumerate_2d;

struct Parser<'a> {
    spec: &'a str,
    rest: &'a str,
}

impl<'a> Parser<'a> {
    fn err(&self, message: impl Into<String>) -> Error {
        Error::Spec {
            spec: self.spec.to_string(),
            message: message.into(),
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        match self.rest.strip_prefix(token) {
            Some(r) => {
                self.rest = r.trim_start();
                true
            }
            None => false,
        }
    }

    fn term(&mut self) -> Result<FanoPolytope> {
        if self.eat("simplex:") {
            let end = self
                .rest
                .find(|c: char| !c.is_ascii_digit())
                .unwrap_or(self.rest.len());
            let digits = &self.rest[..end];
            let n: usize = digits
                .parse()
                .map_err(|_| self.err("expected a dimension after `simplex:`"))?;
            if n == 0 {
                return Err(self.err("simplex dimension must be positive"));
            }
            self.rest = self.rest[end..].trim_start();
            Ok(simplex(n))
        } else if self.eat("hexagon") {
            Ok(hexagon())
        } else if self.eat("product") {
            if !self.eat("(") {
                return Err(self.err("expected `(` after `product`"));
            }
            let mut acc = self.term()?;
            while self.eat(",") {
                acc = free_sum(&acc, &self.term()?);
            }
            if !self.eat(")") {
                return Err(self.err("expected `,` or `)`"));
            }
            Ok(acc)
        } else {
            Err(self.err(format!("unexpected input `{}`", self.rest)))
        }
    }
}

/// Builds the polytope described by `spec`; the result is named after the
/// spec with whitespace removed.
pub fn construct(spec: &str) -> Result<FanoPolytope> {
    let mut parser = Parser {
        spec,
        rest: spec.trim(),
    };
    let p = parser.term()?;
    if !parser.rest.is_empty() {
        return Err(parser.err(format!("trailing input `{}`", parser.rest)));
    }
    let name: String = spec.chars().filter(|c| !c.is_whitespace()).collect();
    Ok(p.with_name(name))
}

/// Specs of every product of 2 or 3 factors drawn with repetition from
/// `simplex:1`, `simplex:2` and `hexagon`.
pub fn corpus_product_specs() -> Vec<String> {
    let factors = ["simplex:1", "simplex:2", "hexagon"];
    (2..=3)
        .flat_map(|k| {
            factors
                .iter()
                .combinations_with_replacement(k)
                .map(|fs| format!("product({})", fs.iter().join(",")))
                .collect::<Vec<_>>()
        })
        .collect()
}

/// The planar classes, simplices of dimension 1 to 8, the hexagon, and the
/// small products.
pub fn standard_corpus() -> Vec<FanoPolytope> {
    let mut out = enumerate_2d(1);
    out.extend((1..=8).map(|n| construct(&format!("simplex:{n}")).expect("valid spec")));
    out.push(construct("hexagon").expect("valid spec"));
    out.extend(
        corpus_product_specs()
            .iter()
            .map(|s| construct(s).expect("valid spec")),
    );
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_specs() {
        let p = construct("simplex:5").unwrap();
        assert_eq!(p.vertices(), simplex(5).vertices());
        assert_eq!(p.name(), "simplex:5");
        assert_eq!(construct("hexagon").unwrap().vertex_count(), 6);
    }

    #[test]
    fn products() {
        let p = construct("product(simplex:2, hexagon)").unwrap();
        assert_eq!(p.name(), "product(simplex:2,hexagon)");
        assert_eq!(p.vertices(), free_sum(&simplex(2), &hexagon()).vertices());
        let cube = construct("product(simplex:1,simplex:1,simplex:1)").unwrap();
        assert_eq!((cube.dim(), cube.vertex_count()), (3, 6));
        let nested = construct("product(product(simplex:1,simplex:1),simplex:1)").unwrap();
        assert_eq!(nested.vertices(), cube.vertices());
    }

    #[test]
    fn malformed() {
        for s in [
            "",
            "simplex:",
            "simplex:0",
            "simplex:x",
            "cube",
            "product()",
            "product(hexagon",
            "hexagon)",
        ] {
            assert!(matches!(construct(s), Err(Error::Spec { .. })), "{s:?}");
        }
    }

    #[test]
    fn corpus_shape() {
        assert_eq!(corpus_product_specs().len(), 16);
        let corpus = standard_corpus();
        assert_eq!(corpus.len(), 5 + 8 + 1 + 16);
        assert!(corpus.iter().map(|p| p.name()).all_unique());
    }
}
