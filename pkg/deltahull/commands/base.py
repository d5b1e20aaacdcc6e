# built-in
import os.path
import sys
from functools import cached_property
from logging import getLogger
from os import environ
from typing import Optional

# external
from dephell_argparse import CommandHandler

# app
from ..actions import get_graph, get_vertex_set, make_json
from ..config import Config, config
from ..constants import CONFIG_NAMES, ENV_VAR_TEMPLATE
from ..models import Graph, InvariantValue, VertexSet


class BaseCommand(CommandHandler):
    logger = getLogger('deltahull.commands')
    prog = 'deltahull'
    find_config = True

    @cached_property
    def config(self) -> Config:
        config.setup_logging()
        self._attach_config_file(path=self.args.config, env=self.args.env)
        config.attach_env_vars()
        config.attach_cli(self.args)
        config.setup_logging()
        return config

    def validate(self) -> bool:
        is_valid = self.config.validate()
        if not is_valid:
            self.logger.error('invalid config')
            print(self.config.format_errors())
        return is_valid

    # properties

    @cached_property
    def usage(self) -> str:
        return 'deltahull {} [OPTIONS]'.format(self.name)

    # helpers

    @classmethod
    def _attach_config_file(cls, path, env) -> bool:
        # get params from env vars if are not specified
        if path is None:
            path = environ.get(ENV_VAR_TEMPLATE.format('CONFIG'))
        if env is None:
            env = environ.get(ENV_VAR_TEMPLATE.format('ENV'), 'main')

        # if path to config specified explicitly, just use it
        if path:
            config.attach_file(path=path, env=env)
            return True

        if not cls.find_config:
            return False

        # if path isn't specified, carefully try default names
        for path in CONFIG_NAMES:
            if not os.path.exists(path):
                continue
            data = config.attach_file(path=path, env=env, silent=True)
            if data is None:
                cls.logger.debug('cannot find tool.deltahull section in the config', extra=dict(
                    path=path,
                ))
                continue
            return True
        return False

    def _get_graph(self) -> Graph:
        graph = get_graph(path=self.config['graph'], fmt=self.config.get('format'))
        self.logger.debug('graph loaded', extra=dict(n=graph.n, edges=graph.edge_count))
        return graph

    def _get_vertex_set(self, graph: Graph) -> VertexSet:
        return get_vertex_set(self.config.get('set', ''), graph=graph)

    def _print_json(self, data, key: Optional[str] = None) -> None:
        print(make_json(
            data=data,
            key=key or self.config.get('filter'),
            colors=not self.config['nocolors'] and sys.stdout.isatty(),
            table=self.config['table'],
        ))

    def _print_invariant(self, value: InvariantValue) -> None:
        if self.config['json']:
            self._print_json(data=value.as_dict())
            return
        print(value.value)
        print(value.witness_set)
