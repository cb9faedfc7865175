from typing import Dict, Type

from .base import TableStore, TableStoreType
from .file import FileTableStore


def create_table_store(store: TableStoreType, directory: str) -> TableStore:
    """Create a table store of the requested type."""
    store_types: Dict[TableStoreType, Type[TableStore]] = {
        TableStoreType.FILE: FileTableStore,
    }

    if store not in store_types:
        raise ValueError(f"Unsupported table store type: {store}")

    return store_types[store](directory)
