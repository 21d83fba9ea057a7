from latticepaths.cli import entrypoint

entrypoint()
