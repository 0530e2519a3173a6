from argparse import Namespace

DEFAULT_SEED = 0


class RunConfig:

    def __init__(self, subcommand: str, inputs: list[str] | None = None, output: str | None = None,
                 seed: int = DEFAULT_SEED, verbosity: int = 0, action: str | None = None):
        self.subcommand = subcommand
        self.action = action
        self.inputs = list(inputs or [])
        self.output = output
        self.seed = seed
        self.verbosity = verbosity

    @classmethod
    def from_namespace(cls, namespace: Namespace) -> 'RunConfig':
        inputs = getattr(namespace, 'files', None) or []
        if getattr(namespace, 'file', None):
            inputs = [namespace.file, *inputs]
        return cls(subcommand=namespace.command,
                   inputs=inputs,
                   output=getattr(namespace, 'output', None),
                   seed=getattr(namespace, 'seed', DEFAULT_SEED),
                   verbosity=getattr(namespace, 'verbose', 0) or 0,
                   action=getattr(namespace, 'action', None))

    @property
    def log_level(self) -> str:
        return {0: 'WARNING', 1: 'INFO'}.get(self.verbosity, 'DEBUG')

    def to_dict(self):
        result = {
            'subcommand': self.subcommand,
            'action': self.action,
            'inputs': self.inputs,
            'output': self.output,
            'seed': self.seed,
            'verbosity': self.verbosity,
        }
        return result
