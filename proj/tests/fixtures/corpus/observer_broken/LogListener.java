public class LogListener implements EventListener {
    public void onEvent(String event) {
        System.out.println("log: " + event);
    }
}
