# -*- coding: utf-8 -*-
"""
****************************************************
*                     Utility                      *
*            (c) 2024 Hybrid Sizer developers      *
****************************************************
"""
from time import sleep
import requests


def get_session(proxy_dict: dict = None) -> requests.Session:
    """
    Function for getting requests session.
    :param proxy_dict: Proxy dictionary.
    :return: Session.
    """
    session = requests.session()
    if proxy_dict is not None:
        session.proxies = proxy_dict
    return session


def safely_request_page(session: requests.Session, url: str, params: dict = None, tries: int = 3,
                        delay: float = 2.0, timeout: float = 30.0) -> requests.Response:
    """
    Function for requesting a page, retrying on connection failures and server-side errors.
    :param session: Session to issue the request with.
    :param url: Target URL.
    :param params: Query parameters. Defaults to None.
    :param tries: Maximum number of tries. Defaults to 3.
    :param delay: Delay to wait before sending off next request. Defaults to 2.0 seconds.
    :param timeout: Request timeout in seconds. Defaults to 30.0.
    :return: Last response.
    :raises requests.exceptions.RequestException: If the last try failed without a response.
    """
    last_error = None
    for attempt in range(max(tries, 1)):
        if attempt:
            sleep(delay)
        try:
            resp = session.get(url, params=params, timeout=timeout)
        except (requests.exceptions.ConnectionError, requests.exceptions.Timeout) as ex:
            last_error = ex
            continue
        if resp.status_code < 500:
            return resp
        last_error = None
    if last_error is not None:
        raise last_error
    return resp
