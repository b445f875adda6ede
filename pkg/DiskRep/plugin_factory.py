#!/usr/bin/env python3
"""
Auto-discovering plugin factory shared by densities, kernels and experiments
"""

import os
import sys
import logging
import importlib
import inspect
from typing import Any, Dict, List, Optional

logger = logging.getLogger(__name__)


class PluginFactory:
    """
    Base class for factories that discover plugin classes in a package folder.

    Subclasses set the package, the plugin folder, the abstract base class and
    the class-name suffixes stripped when deriving registry keys. Each subclass
    must declare its own ``_types`` and ``_display_names`` dictionaries.
    """

    _package: str = ''
    _plugin_dir: str = ''
    _base_class: type = object
    _suffixes: List[str] = []
    _skip_files = {'__init__.py', '__pycache__'}
    _kind = 'plugin'

    _types: Dict[str, type] = {}
    _display_names: Dict[str, str] = {}
    _discovery_complete = False

    @classmethod
    def _package_dir(cls) -> str:
        module = sys.modules.get(cls.__module__)
        return os.path.dirname(os.path.abspath(module.__file__))

    @classmethod
    def _discover(cls):
        """Import every module in the plugin folder and register base-class subclasses"""
        if cls._discovery_complete:
            return

        logger.debug(f"Starting automatic {cls._kind} discovery...")

        plugin_dir = os.path.join(cls._package_dir(), cls._plugin_dir)
        if not os.path.exists(plugin_dir):
            logger.warning(f"{cls._kind.title()} directory not found: {plugin_dir}")
            cls._discovery_complete = True
            return

        # Sorted so registration order (and key collisions) are deterministic
        for filename in sorted(os.listdir(plugin_dir)):
            if filename in cls._skip_files or not filename.endswith('.py'):
                continue

            module_name = filename[:-3]
            try:
                module = importlib.import_module(f'.{cls._plugin_dir}.{module_name}', package=cls._package)
            except Exception as e:
                logger.warning(f"Failed to import {cls._kind} from {filename}: {e}")
                continue

            for name, obj in inspect.getmembers(module, inspect.isclass):
                if (obj is not cls._base_class and
                        issubclass(obj, cls._base_class) and
                        obj.__module__ == module.__name__ and
                        not inspect.isabstract(obj)):

                    key = getattr(obj, 'registry_key', None) or cls._class_name_to_key(name)

                    if key not in cls._types:
                        cls._types[key] = obj
                        cls._display_names[key] = getattr(obj, 'display_name', None) or key.replace('_', ' ').title()
                        logger.debug(f"Auto-discovered {cls._kind}: {key} -> {obj.__name__} ({cls._display_names[key]})")
                    else:
                        logger.debug(f"{cls._kind.title()} key '{key}' already registered, skipping {obj.__name__}")

        cls._discovery_complete = True
        logger.debug(f"{cls._kind.title()} discovery complete. Found {len(cls._types)} {cls._kind}s.")

    @classmethod
    def _class_name_to_key(cls, class_name: str) -> str:
        """
        Convert a class name to a registry key.

        Examples (kernel factory, suffix 'Kernel'):
        - MobiusKernel -> mobius
        - MobiusDerivativeKernel -> mobius_derivative
        - LipschitzCarlesonKernel -> lipschitz_carleson
        """
        key = class_name
        for suffix in cls._suffixes:
            if key.endswith(suffix) and len(key) > len(suffix):
                key = key[:-len(suffix)]
                break

        # Convert CamelCase to snake_case
        result = []
        for i, char in enumerate(key):
            if char.isupper() and i > 0:
                result.append('_')
            result.append(char.lower())

        return ''.join(result)

    @classmethod
    def create(cls, plugin_type: Optional[str] = None, **kwargs) -> Any:
        """
        Create a plugin instance.

        Raises:
            ValueError: If plugin_type is not registered
        """
        cls._discover()

        if plugin_type not in cls._types:
            available_types = ', '.join(sorted(cls._types.keys()))
            raise ValueError(f"Unsupported {cls._kind} type: {plugin_type}. Available types: {available_types}")

        return cls._types[plugin_type](**kwargs)

    @classmethod
    def get_class(cls, plugin_type: str) -> type:
        """Return the registered class without instantiating it"""
        cls._discover()
        if plugin_type not in cls._types:
            available_types = ', '.join(sorted(cls._types.keys()))
            raise ValueError(f"Unsupported {cls._kind} type: {plugin_type}. Available types: {available_types}")
        return cls._types[plugin_type]

    @classmethod
    def key_for(cls, plugin: Any) -> str:
        """Registry key of a plugin instance or class"""
        cls._discover()
        target = plugin if inspect.isclass(plugin) else type(plugin)
        for key, plugin_class in cls._types.items():
            if plugin_class is target:
                return key
        return cls._class_name_to_key(target.__name__)

    @classmethod
    def register(cls, name: str, plugin_class: type, display_name: Optional[str] = None):
        """Register a plugin type manually"""
        cls._discover()
        if not issubclass(plugin_class, cls._base_class):
            logger.warning(f"{plugin_class} does not inherit from {cls._base_class.__name__}")

        if name in cls._types:
            logger.warning(f"{cls._kind.title()} type '{name}' already registered, replacing with new class.")

        cls._types[name] = plugin_class

        if display_name:
            cls._display_names[name] = display_name
        elif getattr(plugin_class, 'display_name', None):
            cls._display_names[name] = plugin_class.display_name
        else:
            cls._display_names[name] = name.replace('_', ' ').title()

        logger.info(f"Manually registered {cls._kind} type: {name} ({cls._display_names[name]})")

    @classmethod
    def get_available_types(cls) -> list:
        """Registered keys in sorted order"""
        cls._discover()
        return sorted(cls._types.keys())

    @classmethod
    def get_display_name(cls, plugin_type: str) -> str:
        """User-friendly display name for a registered key"""
        cls._discover()
        if plugin_type in cls._display_names:
            return cls._display_names[plugin_type]
        return plugin_type.replace('_', ' ').title()

    @classmethod
    def get_available_with_names(cls) -> dict:
        """Mapping of registered keys to display names"""
        cls._discover()
        return {key: cls.get_display_name(key) for key in sorted(cls._types.keys())}

    @classmethod
    def unregister(cls, plugin_type: str):
        """Remove a registered type"""
        if plugin_type not in cls._types:
            raise ValueError(f"{cls._kind.title()} type '{plugin_type}' is not registered")
        del cls._types[plugin_type]
        cls._display_names.pop(plugin_type, None)
        logger.info(f"Unregistered {cls._kind} type: {plugin_type}")
