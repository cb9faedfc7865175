from .base import TableStore, TableStoreType
from .factory import create_table_store

__all__ = ['TableStore', 'TableStoreType', 'create_table_store']
