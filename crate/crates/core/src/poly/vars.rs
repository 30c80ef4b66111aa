use std::collections::HashMap;

use super::PolyError;

/// Ordered, uniquely named polynomial variables.
///
/// The order fixes the monomial order (earlier variables are more
/// significant) and therefore the serialized term order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VarTable {
    names: Vec<String>,
    index: HashMap<String, usize>,
}

impl VarTable {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, PolyError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(names.len());
        for (k, name) in names.iter().enumerate() {
            if name.is_empty() || name.contains([' ', '*', '+', '^']) {
                return Err(PolyError::Parse(format!("invalid variable name {name:?}")));
            }
            if index.insert(name.clone(), k).is_some() {
                return Err(PolyError::DuplicateVariable(name.clone()));
            }
        }
        Ok(Self { names, index })
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, index: usize) -> Option<&str> {
        self.names.get(index).map(String::as_str)
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.index.get(name).copied()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bijective_lookup() {
        let t = VarTable::new(["s_1_2", "t_3_1", "alpha_1"]).unwrap();
        assert_eq!(t.index_of("t_3_1"), Some(1));
        assert_eq!(t.name(2), Some("alpha_1"));
        assert_eq!(t.index_of("r_1_2"), None);
    }

    #[test]
    fn rejects_duplicates_and_bad_names() {
        assert!(matches!(
            VarTable::new(["x", "x"]),
            Err(PolyError::DuplicateVariable(_))
        ));
        assert!(VarTable::new(["a b"]).is_err());
        assert!(VarTable::new(["x^2"]).is_err());
    }
}
