"""Shared cached loaders so the catalog bundles are computed once per run."""

from functools import lru_cache

from framegeom.catalog import catalog_load
from framegeom.curvature import curvature_bundle


@lru_cache(maxsize=None)
def load(entry_id):
    return catalog_load(entry_id)


@lru_cache(maxsize=None)
def bundle_for(entry_id):
    return curvature_bundle(load(entry_id).spec)
