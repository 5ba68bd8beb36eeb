import os
from pathlib import Path

from configmypy import ConfigPipeline, YamlConfig

DEFAULT_CONFIG_FOLDER = Path(__file__).resolve().parent.joinpath("config")
DEFAULT_CONFIG_FILE = "perfume_config.yaml"


def get_config(config_name="default", config_file=DEFAULT_CONFIG_FILE,
               config_folder=None, verbose=False):
    """Reads the analysis configuration

    The ``default`` section is always read first; any other section
    is applied on top of it, so presets only list what they change.

    Parameters
    ----------
    config_name : str, default is 'default'
        section of the yaml file to use
    config_file : str, default is 'perfume_config.yaml'
    config_folder : str or pathlib.Path, optional
        folder containing ``config_file``,
        defaults to the configuration shipped with the package
    verbose : bool, default is False
        if True, print the resulting configuration

    Returns
    -------
    config : configmypy.Bunch
    """
    if config_folder is None:
        config_folder = DEFAULT_CONFIG_FOLDER
    config_folder = Path(config_folder).as_posix()

    steps = [YamlConfig(config_file, config_name="default", config_folder=config_folder)]
    if config_name != "default":
        steps.append(
            YamlConfig(config_file, config_name=config_name, config_folder=config_folder)
        )
    pipe = ConfigPipeline(steps)
    config = pipe.read_conf()

    if verbose:
        pipe.log()
    return config


def resolve_jobs(jobs):
    """Returns the number of worker processes to use

    Parameters
    ----------
    jobs : int or None
        requested number of workers, 0 or None means every available core

    Returns
    -------
    int, at least 1
    """
    if jobs is None or jobs == 0:
        return os.cpu_count() or 1
    if jobs < 0:
        raise ValueError(f"Got jobs={jobs}, expected a positive integer (or 0 for all cores).")
    return int(jobs)
