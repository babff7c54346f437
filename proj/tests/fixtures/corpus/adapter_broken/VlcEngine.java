// Third-party playback engine with its own naming scheme.
public class VlcEngine {
    public void playVlc(String file) {
        System.out.println("vlc " + file);
    }
}
