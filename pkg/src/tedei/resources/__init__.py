# Bundled data files; kept importable so importlib.resources can address them.
