use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use crate::coeff::Field;
use crate::error::Result;
use crate::groebner::basis::{buchberger, GroebnerBasis};
use crate::poly::{MonomialOrder, PolyRing, Polynomial};

#[derive(Clone, PartialEq, Eq, Hash)]
struct CacheKey {
    field: Field,
    vars: Vec<String>,
    order: MonomialOrder,
    gens: Vec<Polynomial>,
}

/// Shared store of reduced Gröbner bases keyed by ring and monic generator list.
pub struct GbCache {
    map: RwLock<HashMap<CacheKey, Arc<GroebnerBasis>>>,
    capacity: usize,
}

impl GbCache {
    pub fn new(capacity: usize) -> Self {
        GbCache { map: RwLock::new(HashMap::new()), capacity }
    }

    /// The process-wide cache.
    pub fn global() -> &'static GbCache {
        static CACHE: OnceLock<GbCache> = OnceLock::new();
        CACHE.get_or_init(|| GbCache::new(4096))
    }

    pub fn len(&self) -> usize {
        self.map.read().unwrap().len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn clear(&self) {
        self.map.write().unwrap().clear();
    }

    /// Looks the basis up, computing and inserting it on a miss.
    pub fn groebner(&self, ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<Arc<GroebnerBasis>> {
        let mut key_gens: Vec<Polynomial> = Vec::with_capacity(gens.len());
        for g in gens {
            let g = g.map_into(ring)?.monic();
            if !g.is_zero() && !key_gens.contains(&g) {
                key_gens.push(g);
            }
        }
        let key = CacheKey {
            field: ring.field(),
            vars: ring.vars().to_vec(),
            order: ring.order().clone(),
            gens: key_gens,
        };
        if let Some(gb) = self.map.read().unwrap().get(&key) {
            if Arc::ptr_eq(gb.ring(), ring) || **gb.ring() == **ring {
                return Ok(gb.clone());
            }
        }
        let gb = Arc::new(buchberger(ring, &key.gens)?);
        let mut map = self.map.write().unwrap();
        if map.len() >= self.capacity {
            map.clear();
        }
        map.insert(key, gb.clone());
        Ok(gb)
    }
}

/// Cached reduced Gröbner basis of `gens` in `ring`.
pub fn cached_groebner(ring: &Arc<PolyRing>, gens: &[Polynomial]) -> Result<Arc<GroebnerBasis>> {
    GbCache::global().groebner(ring, gens)
}
